#include "degenkit/blowup.hpp"

#include <algorithm>

#include "degenkit/error.hpp"

namespace degenkit {

void check_move(const SncModel& model, const BlowupMove& move) {
  if (move.center.size() < 2) {
    throw Error(Errc::InvalidCenter, "center {" + face_to_string(move.center) + "} has fewer than two components");
  }
  if (!std::is_sorted(move.center.begin(), move.center.end()) ||
      std::adjacent_find(move.center.begin(), move.center.end()) != move.center.end()) {
    throw Error(Errc::InvalidCenter, "center is not a set of component ids");
  }
  if (model.stratum(move.center) == nullptr) {
    throw Error(Errc::InvalidCenter, "stratum {" + face_to_string(move.center) + "} is empty");
  }
  if (!is_valid_component_id(move.new_id.str())) {
    throw Error(Errc::IdCollision, "invalid component id '" + move.new_id.str() + "'");
  }
  if (model.component(move.new_id) != nullptr) {
    throw Error(Errc::IdCollision, "component id '" + move.new_id.str() + "' already exists");
  }
}

SncModel blow_up_stratum(const SncModel& model, const BlowupMove& move) {
  const auto violations = validate_structure(model);
  if (!violations.empty()) throw Error(Errc::InvalidModel, violations.front().to_string());
  check_move(model, move);

  const Face& center = move.center;
  auto union_with_center = [&](const Face& s) {
    Face u;
    std::set_union(s.begin(), s.end(), center.begin(), center.end(), std::back_inserter(u));
    return u;
  };

  std::map<Face, VarElement> strata;
  for (const auto& [face, cls] : model.strata()) {
    if (is_subface(center, face)) continue;  // S ⊇ J: empty after the blow-up
    const Face joined = union_with_center(face);
    const VarElement* meet = model.stratum(joined);
    if (meet == nullptr) {
      strata.emplace(face, cls);
      continue;
    }
    const auto codim = static_cast<unsigned>(joined.size() - face.size());
    // [Bl_Z W] = [W] + (L + ... + L^{c-1}) [Z]
    strata.emplace(face, cls + (VarElement::lefschetz_sum(codim) - VarElement(1)) * *meet);
    Face with_new = face;
    with_new.push_back(move.new_id);
    strata.emplace(make_face(std::move(with_new)), VarElement::lefschetz_sum(codim) * *meet);
  }
  strata.emplace(Face{move.new_id},
                 VarElement::lefschetz_sum(static_cast<unsigned>(center.size())) * *model.stratum(center));

  std::vector<Component> components;
  long new_multiplicity = 0;
  for (const auto& c : model.components()) {
    components.push_back(Component{c.id, c.multiplicity, strata.at(Face{c.id})});
    if (std::binary_search(center.begin(), center.end(), c.id)) new_multiplicity += c.multiplicity;
  }
  components.push_back(Component{move.new_id, new_multiplicity, strata.at(Face{move.new_id})});
  return SncModel(model.generic_dim(), std::move(components), std::move(strata));
}

std::vector<Face> admissible_centers(const SncModel& model) {
  std::vector<Face> out;
  for (const auto& [face, cls] : model.strata()) {
    if (face.size() >= 2) out.push_back(face);
  }
  return out;
}

}  // namespace degenkit
