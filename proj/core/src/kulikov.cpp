#include "degenkit/kulikov.hpp"

#include <algorithm>
#include <set>

#include "degenkit/error.hpp"

namespace degenkit {

std::string rational_surface_label(const Integer& euler) { return "RatSurf_e" + euler.get_str(); }

VarElement rational_surface_class(const Integer& euler) {
  return VarElement(1) + VarElement::term(euler - 2, ClassMonomial{}, 1) + VarElement::lefschetz(2);
}

SncModel build_type_ii(const TypeIIData& data, const Catalog& catalog) {
  if (data.r < 1) throw Error(Errc::BadChain, "a type II chain needs r >= 1");
  if (data.first_end_euler < 3 || data.last_end_euler < 3) {
    throw Error(Errc::BadChain, "end components are rational surfaces, so their Euler numbers are at least 3");
  }
  const AtomicLabel& curve = catalog.at(data.elliptic_label);
  if (curve.kind != LabelKind::Opaque || curve.dim != 1 || curve.euler != 0) {
    throw Error(Errc::BadChain, "'" + data.elliptic_label + "' is not an opaque curve of Euler number 0");
  }
  const std::string ruled = data.ruled_label.empty() ? "Ruled" + data.elliptic_label : data.ruled_label;
  if (data.r > 1) {
    const AtomicLabel& middle = catalog.at(ruled);
    if (middle.dim != 2) throw Error(Errc::BadChain, "'" + ruled + "' is not a surface");
  }
  const std::string first = rational_surface_label(data.first_end_euler);
  const std::string last = rational_surface_label(data.last_end_euler);
  for (const auto& label : {first, last}) {
    const AtomicLabel& end = catalog.at(label);
    if (end.kind != LabelKind::Expandable || end.dim != 2) {
      throw Error(Errc::BadChain, "'" + label + "' is not a rational surface");
    }
  }

  std::vector<Component> components;
  std::map<Face, VarElement> strata;
  const VarElement curve_class = VarElement::label(data.elliptic_label);
  for (long i = 0; i <= data.r; ++i) {
    const std::string label = i == 0 ? first : (i == data.r ? last : ruled);
    components.push_back(Component{ComponentId(std::to_string(i)), 1, VarElement::label(label)});
    if (i > 0) {
      strata.emplace(make_face({ComponentId(std::to_string(i - 1)), ComponentId(std::to_string(i))}), curve_class);
    }
  }
  return SncModel(2, std::move(components), std::move(strata));
}

TypeIIIModel build_type_iii(const TypeIIIData& data) {
  std::set<ComponentId> ids;
  std::vector<Component> components;
  for (const auto& [id, e] : data.vertices) {
    if (!ids.insert(id).second) throw Error(Errc::NotAComplex, "vertex " + id.str() + " listed twice");
    components.push_back(Component{id, 1, rational_surface_class(e)});
  }
  if (components.empty()) throw Error(Errc::NotAComplex, "no vertices");

  std::map<Face, VarElement> strata;
  std::set<Face> edge_set;
  for (const auto& edge : data.edges) {
    if (edge.size() != 2) throw Error(Errc::NotAComplex, "edge {" + face_to_string(edge) + "} does not join two vertices");
    for (const auto& v : edge) {
      if (!ids.contains(v)) throw Error(Errc::NotAComplex, "edge {" + face_to_string(edge) + "} uses unknown vertex " + v.str());
    }
    if (!edge_set.insert(edge).second) throw Error(Errc::NotAComplex, "edge {" + face_to_string(edge) + "} listed twice");
    strata.emplace(edge, VarElement(1) + VarElement::lefschetz());
  }
  std::set<Face> face_set;
  for (const auto& face : data.faces) {
    if (face.size() != 3) throw Error(Errc::NotAComplex, "face {" + face_to_string(face) + "} is not a triangle");
    for (std::size_t skip = 0; skip < 3; ++skip) {
      Face edge;
      for (std::size_t i = 0; i < 3; ++i)
        if (i != skip) edge.push_back(face[i]);
      if (!edge_set.contains(edge)) {
        throw Error(Errc::NotAComplex, "face {" + face_to_string(face) + "} needs edge {" + face_to_string(edge) + "}");
      }
    }
    if (!face_set.insert(face).second) throw Error(Errc::NotAComplex, "face {" + face_to_string(face) + "} listed twice");
    strata.emplace(face, VarElement(1));
  }

  TypeIIIModel out{SncModel(2, std::move(components), std::move(strata)), {}};
  const long chi = static_cast<long>(data.vertices.size()) - static_cast<long>(data.edges.size()) +
                   static_cast<long>(data.faces.size());
  if (chi != 2) {
    out.warnings.push_back("dual complex has V - E + F = " + std::to_string(chi) + ", not 2; it is not a triangulation of S^2");
  }
  return out;
}

TypeIIData parse_type_ii(const kv::Document& doc) {
  const kv::Section& root = doc.root();
  root.expect_keys({"kind", "r", "end_eulers", "elliptic_label", "ruled_label"});
  doc.expect_sections({});
  TypeIIData d;
  d.r = parse_small_int(root.require("r"), 0, 10000, "r");
  const auto ends = kv::split(root.require("end_eulers"), ',');
  if (ends.size() != 2) throw Error(Errc::Parse, "end_eulers takes two comma-separated integers");
  d.first_end_euler = parse_integer(ends[0]);
  d.last_end_euler = parse_integer(ends[1]);
  if (auto label = root.get("elliptic_label")) {
    if (!is_valid_label_name(*label)) throw Error(Errc::Parse, "invalid elliptic_label");
    d.elliptic_label = *label;
  }
  if (auto label = root.get("ruled_label")) {
    if (!is_valid_label_name(*label)) throw Error(Errc::Parse, "invalid ruled_label");
    d.ruled_label = *label;
  }
  return d;
}

TypeIIIData parse_type_iii(const kv::Document& doc) {
  doc.root().expect_keys({"kind"});
  doc.expect_sections({"vertices", "edges", "faces"});
  TypeIIIData d;
  const kv::Section* vertices = doc.section("vertices");
  if (vertices == nullptr) throw Error(Errc::Parse, "missing [vertices] section");
  vertices->expect_only_pairs();
  for (const auto& e : vertices->entries) {
    if (!is_valid_component_id(e.key)) throw Error(Errc::Parse, "line " + std::to_string(e.line) + ": invalid vertex id");
    d.vertices.emplace_back(ComponentId(e.key), parse_integer(*e.value));
  }
  if (const kv::Section* edges = doc.section("edges")) {
    edges->expect_only_bare();
    for (const auto& e : edges->entries) d.edges.push_back(parse_face(e.key));
  }
  if (const kv::Section* faces = doc.section("faces")) {
    faces->expect_only_bare();
    for (const auto& e : faces->entries) d.faces.push_back(parse_face(e.key));
  }
  return d;
}

std::vector<std::string> k3_euler_warnings(const SgtElement& rho) {
  const Integer pt = rho.point_coefficient();
  if (pt == 0) return {};
  SgtElement rest = rho - SgtElement::point(pt);
  return {"euler-discrepancy: [pt] coefficient is " + pt.get_str() +
          " (nonzero); a vanishing Euler number of the fiber would force it to 0. Remaining part: " + rest.to_string()};
}

}  // namespace degenkit
