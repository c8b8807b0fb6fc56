#include "degenkit/catalog.hpp"

#include <functional>
#include <set>

#include "degenkit/error.hpp"
#include "degenkit/keyvalue.hpp"
#include "default_catalog.inc"

namespace degenkit {
namespace {

[[noreturn]] void invalid(const std::string& label, const std::string& what) {
  throw Error(Errc::InvalidCatalog, "[" + label + "] " + what);
}

Integer value_at_one(const VarElement& polynomial) {
  Integer total = 0;
  for (const auto& [key, c] : polynomial.terms()) total += c;
  return total;
}

}  // namespace

std::string_view to_string(LabelKind kind) { return kind == LabelKind::Expandable ? "expandable" : "opaque"; }

Catalog Catalog::from_entries(std::vector<CatalogEntry> entries) {
  Catalog cat;
  for (auto& e : entries) {
    const std::string name = e.label.name;
    if (!is_valid_label_name(name)) invalid(name, "invalid label name");
    if (!cat.entries_.emplace(name, std::move(e)).second) invalid(name, "duplicate label");
  }

  // Per-entry checks that do not need other labels.
  for (const auto& [name, e] : cat.entries_) {
    const auto& label = e.label;
    if (label.dim < 0) invalid(name, "negative dimension");
    if (label.kind == LabelKind::Expandable) {
      if (!e.var_expansion) invalid(name, "expandable label without var_expansion");
      if (!e.var_expansion->is_label_free()) invalid(name, "var_expansion of an expandable label must be a polynomial in L");
      if (e.sgt_expansion) invalid(name, "expandable labels take no sgt_expansion");
      if (value_at_one(*e.var_expansion) != label.euler) invalid(name, "var_expansion at L=1 differs from euler");
      unsigned degree = 0;
      for (const auto& [key, c] : e.var_expansion->terms()) degree = std::max(degree, key.lefschetz);
      if (static_cast<int>(degree) != label.dim) invalid(name, "var_expansion degree differs from dim");
    } else {
      if (name == kPointLabel) invalid(name, "pt must be expandable");
      if (label.dim == 0) invalid(name, "opaque labels of dimension 0 are not allowed");
    }
  }

  // References and acyclicity.
  auto references = [&](const CatalogEntry& e) {
    std::set<std::string> refs;
    if (e.var_expansion)
      for (const auto& [key, c] : e.var_expansion->terms()) refs.insert(key.monomial.labels().begin(), key.monomial.labels().end());
    if (e.sgt_expansion)
      for (const auto& [key, c] : e.sgt_expansion->terms()) refs.insert(key.labels().begin(), key.labels().end());
    return refs;
  };
  for (const auto& [name, e] : cat.entries_) {
    for (const auto& ref : references(e)) {
      if (!cat.entries_.contains(ref)) invalid(name, "expansion refers to unknown label '" + ref + "'");
    }
  }

  enum class Mark { None, Active, Done };
  std::map<std::string, Mark, std::less<>> marks;
  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    auto& mark = marks[name];
    if (mark == Mark::Done) return;
    if (mark == Mark::Active) invalid(name, "expansion cycle");
    mark = Mark::Active;
    const auto& e = cat.entries_.at(name);
    for (const auto& ref : references(e)) visit(ref);

    // Children are resolved; compute this label's K0(sGT) class.
    SgtElement cls;
    if (e.label.kind == LabelKind::Expandable) {
      cls = SgtElement::point(e.label.euler);
    } else if (e.sgt_expansion) {
      for (const auto& [basis, c] : e.sgt_expansion->terms()) {
        SgtElement term = SgtElement::point(c);
        for (const auto& l : basis.labels()) term = SgtElement::formal_product(term, cat.sgt_classes_.at(l));
        cls += term;
      }
    } else {
      cls = SgtElement::basis(ClassMonomial::of(name));
    }
    cat.sgt_classes_.emplace(name, std::move(cls));
    marks[name] = Mark::Done;
  };
  for (const auto& [name, e] : cat.entries_) visit(name);

  // Consistency of opaque expansions with euler, dimension and each other.
  for (const auto& [name, e] : cat.entries_) {
    if (e.label.kind != LabelKind::Opaque) continue;
    if (e.var_expansion) {
      if (euler(*e.var_expansion, cat) != e.label.euler) invalid(name, "euler of var_expansion differs from euler");
      bool top = false;
      for (const auto& [key, c] : e.var_expansion->terms()) {
        const int d = cat.monomial_dim(key.monomial) + static_cast<int>(key.lefschetz);
        if (d > e.label.dim) invalid(name, "var_expansion exceeds the label dimension");
        if (d == e.label.dim) top = true;
      }
      if (!top) invalid(name, "var_expansion has no top-dimensional part");
    }
    if (e.sgt_expansion) {
      Integer total = 0;
      for (const auto& [basis, c] : e.sgt_expansion->terms()) {
        Integer product = c;
        for (const auto& l : basis.labels()) product *= cat.entries_.at(l).label.euler;
        total += product;
      }
      if (total != e.label.euler) invalid(name, "euler of sgt_expansion differs from euler");
      if (e.var_expansion && mu(*e.var_expansion, cat) != cat.sgt_classes_.at(name)) {
        invalid(name, "sgt_expansion disagrees with mu(var_expansion)");
      }
    }
  }
  return cat;
}

Catalog Catalog::parse(std::string_view text) {
  const kv::Document doc = kv::Document::parse(text);
  if (!doc.root().entries.empty()) {
    throw Error(Errc::Parse, "line " + std::to_string(doc.root().entries.front().line) +
                                 ": catalog entries must live in [label] sections");
  }
  std::vector<CatalogEntry> entries;
  for (const auto& section : doc.sections()) {
    section.expect_keys({"dim", "euler", "kind", "var_expansion", "sgt_expansion", "note"});
    CatalogEntry e;
    e.label.name = section.name;
    if (!is_valid_label_name(section.name)) {
      throw Error(Errc::Parse, "line " + std::to_string(section.line) + ": invalid label name");
    }
    e.label.dim = static_cast<int>(parse_small_int(section.require("dim"), 0, 64, "dim"));
    e.label.euler = parse_integer(section.require("euler"));
    const std::string& kind = section.require("kind");
    if (kind == "expandable") {
      e.label.kind = LabelKind::Expandable;
    } else if (kind == "opaque") {
      e.label.kind = LabelKind::Opaque;
    } else {
      throw Error(Errc::Parse, "[" + section.name + "] kind must be expandable or opaque");
    }
    if (auto v = section.get("var_expansion")) e.var_expansion = VarElement::parse(*v);
    if (auto v = section.get("sgt_expansion")) e.sgt_expansion = SgtElement::parse(*v);
    if (auto v = section.get("note")) e.note = *v;
    entries.push_back(std::move(e));
  }
  return from_entries(std::move(entries));
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(kDefaultCatalogText);
  return cat;
}

std::string_view Catalog::builtin_text() { return kDefaultCatalogText; }

bool Catalog::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

const CatalogEntry& Catalog::entry(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw Error(Errc::UnknownLabel, "label '" + std::string(name) + "' is not in the catalog");
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [name, e] : entries_) out.push_back(name);
  return out;
}

VarElement Catalog::expand(std::string_view name) const {
  const CatalogEntry& e = entry(name);
  if (e.label.kind == LabelKind::Expandable) return *e.var_expansion;
  return VarElement::label(std::string(name));
}

const SgtElement& Catalog::sgt_class(std::string_view name) const {
  auto it = sgt_classes_.find(name);
  if (it == sgt_classes_.end()) throw Error(Errc::UnknownLabel, "label '" + std::string(name) + "' is not in the catalog");
  return it->second;
}

int Catalog::monomial_dim(const ClassMonomial& monomial) const {
  int d = 0;
  for (const auto& l : monomial.labels()) d += at(l).dim;
  return d;
}

std::string Catalog::to_text() const {
  std::string out;
  for (const auto& [name, e] : entries_) {
    if (!out.empty()) out += '\n';
    out += "[" + name + "]\n";
    out += "dim = " + std::to_string(e.label.dim) + "\n";
    out += "euler = " + e.label.euler.get_str() + "\n";
    out += "kind = " + std::string(to_string(e.label.kind)) + "\n";
    if (e.var_expansion) out += "var_expansion = " + e.var_expansion->to_string() + "\n";
    if (e.sgt_expansion) out += "sgt_expansion = " + e.sgt_expansion->to_string() + "\n";
    if (!e.note.empty()) out += "note = " + e.note + "\n";
  }
  return out;
}

VarElement toric_class(std::span<const Integer> f) {
  if (f.empty()) throw Error(Errc::MalformedFVector, "empty f-vector");
  if (f.size() > 65) throw Error(Errc::MalformedFVector, "f-vector too long");
  if (f[0] != 1) throw Error(Errc::MalformedFVector, "f[0] must be 1 (the zero cone)");
  for (const auto& v : f) {
    if (v <= 0) throw Error(Errc::MalformedFVector, "f-vector entries must be positive");
  }
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  const VarElement torus = VarElement::lefschetz() - VarElement(1);
  VarElement out;
  for (unsigned k = 0; k <= d; ++k) out += f[k] * torus.pow(d - k);
  return out;
}

VarElement toric_class(std::initializer_list<long> f) {
  std::vector<Integer> values(f.begin(), f.end());
  return toric_class(std::span<const Integer>(values));
}

}  // namespace degenkit
