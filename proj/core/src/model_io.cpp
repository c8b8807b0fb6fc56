#include "degenkit/model_io.hpp"

#include <set>

#include "degenkit/error.hpp"

namespace degenkit {

ModelKind model_kind(const kv::Document& doc) {
  const auto kind = doc.root().get("kind");
  if (!kind || *kind == "snc-model") return ModelKind::Snc;
  if (*kind == "kulikov-ii") return ModelKind::KulikovII;
  if (*kind == "kulikov-iii") return ModelKind::KulikovIII;
  throw Error(Errc::Parse, "unknown model kind '" + *kind + "'");
}

ModelFile parse_model(const kv::Document& doc) {
  if (model_kind(doc) != ModelKind::Snc) throw Error(Errc::Parse, "not an snc-model file");
  const kv::Section& root = doc.root();
  root.expect_keys({"kind", "generic_dim", "family"});
  doc.expect_sections({"components", "multiplicities", "strata"});

  ModelFile out;
  const int generic_dim = static_cast<int>(parse_small_int(root.require("generic_dim"), 0, 64, "generic_dim"));
  if (auto family = root.get("family")) {
    if (*family == "k3") {
      out.k3_family = true;
    } else if (*family != "generic") {
      throw Error(Errc::Parse, "family must be generic or k3");
    }
  }

  const kv::Section* comps = doc.section("components");
  if (comps == nullptr) throw Error(Errc::Parse, "missing [components] section");
  comps->expect_only_pairs();
  std::vector<Component> components;
  std::set<std::string> ids;
  for (const auto& e : comps->entries) {
    if (!is_valid_component_id(e.key)) {
      throw Error(Errc::Parse, "line " + std::to_string(e.line) + ": invalid component id '" + e.key + "'");
    }
    components.push_back(Component{ComponentId(e.key), 1, VarElement::parse(*e.value)});
    ids.insert(e.key);
  }

  if (const kv::Section* mult = doc.section("multiplicities")) {
    mult->expect_only_pairs();
    for (const auto& e : mult->entries) {
      if (!ids.contains(e.key)) {
        throw Error(Errc::Parse, "line " + std::to_string(e.line) + ": multiplicity for unknown component '" + e.key + "'");
      }
      const long m = parse_small_int(*e.value, 1, 1000000000L, "multiplicity");
      for (auto& c : components)
        if (c.id.str() == e.key) c.multiplicity = m;
    }
  }

  std::map<Face, VarElement> strata;
  if (const kv::Section* st = doc.section("strata")) {
    st->expect_only_pairs();
    for (const auto& e : st->entries) {
      Face face = parse_face(e.key);
      if (strata.contains(face)) {
        throw Error(Errc::Parse, "line " + std::to_string(e.line) + ": stratum {" + face_to_string(face) + "} listed twice");
      }
      if (*e.value == "empty") continue;
      strata.emplace(std::move(face), VarElement::parse(*e.value));
    }
  }
  out.model = SncModel(generic_dim, std::move(components), std::move(strata));
  return out;
}

ModelFile parse_model(std::string_view text) { return parse_model(kv::Document::parse(text)); }

std::string write_model(const SncModel& model, bool k3_family) {
  std::string out = "kind = snc-model\n";
  out += "generic_dim = " + std::to_string(model.generic_dim()) + "\n";
  if (k3_family) out += "family = k3\n";
  out += "\n[components]\n";
  for (const auto& c : model.components()) out += c.id.str() + " = " + c.cls.to_string() + "\n";
  out += "\n[multiplicities]\n";
  for (const auto& c : model.components()) out += c.id.str() + " = " + std::to_string(c.multiplicity) + "\n";
  out += "\n[strata]\n";
  for (const auto& [face, cls] : model.strata()) {
    if (face.size() < 2) continue;
    out += face_to_string(face) + " = " + cls.to_string() + "\n";
  }
  return out;
}

}  // namespace degenkit
