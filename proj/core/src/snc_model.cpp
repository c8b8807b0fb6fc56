#include "degenkit/snc_model.hpp"

#include <algorithm>
#include <cctype>

#include "degenkit/error.hpp"
#include "degenkit/keyvalue.hpp"

namespace degenkit {
namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view strip_leading_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

void require_valid(const SncModel& model) {
  const auto violations = validate_structure(model);
  if (!violations.empty()) throw Error(Errc::InvalidModel, violations.front().to_string());
}

Integer sign_power(std::size_t exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

}  // namespace

ComponentId::ComponentId(std::string value) : value_(std::move(value)) {}

std::strong_ordering operator<=>(const ComponentId& a, const ComponentId& b) {
  const bool an = all_digits(a.value_);
  const bool bn = all_digits(b.value_);
  if (an != bn) return an ? std::strong_ordering::less : std::strong_ordering::greater;
  if (an) {
    const auto sa = strip_leading_zeros(a.value_);
    const auto sb = strip_leading_zeros(b.value_);
    if (sa.size() != sb.size()) return sa.size() <=> sb.size();
    if (auto c = sa.compare(sb); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = a.value_.compare(b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool is_valid_component_id(std::string_view text) {
  if (text.empty() || text.size() > 32) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Face make_face(std::vector<ComponentId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

Face make_face(std::initializer_list<std::string_view> ids) {
  std::vector<ComponentId> out;
  for (auto id : ids) out.emplace_back(std::string(id));
  return make_face(std::move(out));
}

Face parse_face(std::string_view text) {
  std::vector<ComponentId> ids;
  for (const auto& part : kv::split(text, ',')) {
    if (!is_valid_component_id(part)) throw Error(Errc::Parse, "invalid component id '" + part + "' in '" + std::string(text) + "'");
    ids.emplace_back(part);
  }
  Face face = make_face(std::move(ids));
  if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
    throw Error(Errc::Parse, "repeated component id in '" + std::string(text) + "'");
  }
  return face;
}

std::string face_to_string(const Face& face) {
  std::string out;
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i > 0) out += ',';
    out += face[i].str();
  }
  return out;
}

bool is_subface(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string Violation::to_string() const {
  std::string out = rule + " at {" + face_to_string(face) + "}";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

SncModel::SncModel(int generic_dim, std::vector<Component> components, std::map<Face, VarElement> strata)
    : generic_dim_(generic_dim), components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(), [](const Component& a, const Component& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i - 1].id == components_[i].id) {
      throw Error(Errc::IdCollision, "component id '" + components_[i].id.str() + "' appears twice");
    }
  }
  for (auto& [face, cls] : strata) strata_.emplace(make_face(face), std::move(cls));
  for (const auto& c : components_) strata_.try_emplace(Face{c.id}, c.cls);
}

const Component* SncModel::component(const ComponentId& id) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), id,
                             [](const Component& c, const ComponentId& key) { return c.id < key; });
  return it != components_.end() && it->id == id ? &*it : nullptr;
}

const VarElement* SncModel::stratum(const Face& face) const {
  auto it = strata_.find(face);
  return it == strata_.end() ? nullptr : &it->second;
}

std::vector<Violation> validate_structure(const SncModel& model) {
  std::vector<Violation> out;
  if (model.generic_dim() < 0) out.push_back({"generic dimension", {}, "must be nonnegative"});
  if (model.components().empty()) out.push_back({"components", {}, "model has no components"});
  for (const auto& c : model.components()) {
    if (c.multiplicity < 1) out.push_back({"multiplicity", {c.id}, "must be at least 1"});
  }
  for (const auto& [face, cls] : model.strata()) {
    if (face.empty()) {
      out.push_back({"empty face", face, "strata are indexed by nonempty sets"});
      continue;
    }
    bool known = true;
    for (const auto& id : face) {
      if (model.component(id) == nullptr) {
        out.push_back({"face closure", Face{id}, "'" + id.str() + "' is not a component, but {" + face_to_string(face) + "} is nonempty"});
        known = false;
      }
    }
    if (!known) continue;
    if (face.size() == 1 && model.component(face.front())->cls != cls) {
      out.push_back({"component class", face, "stratum class differs from the component class"});
    }
    if (static_cast<long>(face.size()) > model.generic_dim() + 1) {
      out.push_back({"stratum size", face, "more than generic_dim+1 components meet"});
    }
    if (face.size() > 1) {
      for (std::size_t skip = 0; skip < face.size(); ++skip) {
        Face facet;
        for (std::size_t i = 0; i < face.size(); ++i)
          if (i != skip) facet.push_back(face[i]);
        if (model.stratum(facet) == nullptr) {
          out.push_back({"face closure", facet, "subset of nonempty {" + face_to_string(face) + "} is empty"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const SncModel& model, const Catalog& catalog) {
  std::vector<Violation> out = validate_structure(model);
  for (const auto& [face, cls] : model.strata()) {
    if (face.empty()) continue;
    const long target = model.generic_dim() + 1 - static_cast<long>(face.size());
    if (cls.is_zero()) {
      out.push_back({"dimension law", face, "nonempty stratum has class 0"});
      continue;
    }
    bool labels_known = true;
    for (const auto& [key, c] : cls.terms()) {
      for (const auto& label : key.monomial.labels()) {
        if (!catalog.contains(label)) {
          out.push_back({"unknown label", face, "'" + label + "'"});
          labels_known = false;
        }
      }
    }
    if (!labels_known) continue;
    bool top = false;
    bool too_big = false;
    for (const auto& [key, c] : cls.terms()) {
      const long d = catalog.monomial_dim(key.monomial) + static_cast<long>(key.lefschetz);
      if (d > target) too_big = true;
      if (d == target) top = true;
    }
    if (too_big) {
      out.push_back({"dimension law", face, "class has a term of dimension above " + std::to_string(target)});
    } else if (!top) {
      out.push_back({"dimension law", face, "class has no term of dimension " + std::to_string(target)});
    }
  }
  return out;
}

namespace {

VarElement open_class_unchecked(const SncModel& model, const Face& face) {
  VarElement out;
  for (const auto& [other, cls] : model.strata()) {
    if (other.size() < face.size() || !is_subface(face, other)) continue;
    out += sign_power(other.size() - face.size()) * cls;
  }
  return out;
}

}  // namespace

VarElement open_stratum_class(const SncModel& model, const Face& face) {
  require_valid(model);
  if (model.stratum(face) == nullptr) {
    throw Error(Errc::EmptyStratum, "stratum {" + face_to_string(face) + "} is empty");
  }
  return open_class_unchecked(model, face);
}

VarElement rho_var(const SncModel& model) {
  require_valid(model);
  const VarElement one_minus_l = VarElement(1) - VarElement::lefschetz();
  VarElement out;
  for (const auto& [face, cls] : model.strata()) {
    out += one_minus_l.pow(static_cast<unsigned>(face.size() - 1)) * open_class_unchecked(model, face);
  }
  return out;
}

VarElement rho_var_via_bundles(const SncModel& model) {
  require_valid(model);
  VarElement out;
  for (const auto& [face, cls] : model.strata()) {
    out += sign_power(face.size() - 1) * (VarElement::lefschetz_sum(static_cast<unsigned>(face.size())) * cls);
  }
  return out;
}

VarElement rho_sgt_lift(const SncModel& model) {
  require_valid(model);
  VarElement out;
  for (const auto& [face, cls] : model.strata()) {
    const Integer weight = sign_power(face.size() - 1) * static_cast<unsigned long>(face.size());
    out += weight * cls;
  }
  return out;
}

SgtElement rho_sgt(const SncModel& model, const Catalog& catalog) { return mu(rho_sgt_lift(model), catalog); }

VarElement special_fiber_class(const SncModel& model) {
  require_valid(model);
  VarElement out;
  for (const auto& [face, cls] : model.strata()) out += sign_power(face.size() - 1) * cls;
  return out;
}

}  // namespace degenkit
