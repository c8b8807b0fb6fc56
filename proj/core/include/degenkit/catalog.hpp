#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/numeric.hpp"
#include "degenkit/ring.hpp"

namespace degenkit {

enum class LabelKind { Expandable, Opaque };

std::string_view to_string(LabelKind kind);

struct AtomicLabel {
  std::string name;
  int dim = 0;
  Integer euler = 0;
  LabelKind kind = LabelKind::Opaque;
};

/// Expandable labels carry an L-polynomial class (rational varieties).
/// Opaque labels stay formal; they may carry a K0(Var) expansion over other
/// labels and a K0(sGT) reduction (e.g. a P^1-bundle over a curve).
struct CatalogEntry {
  AtomicLabel label;
  std::optional<VarElement> var_expansion;
  std::optional<SgtElement> sgt_expansion;
  std::string note;
};

/// Immutable registry of atomic labels.
class Catalog {
 public:
  /// Validates every entry and the acyclicity of the expansion graph;
  /// throws Error(InvalidCatalog).
  static Catalog from_entries(std::vector<CatalogEntry> entries);

  /// Reads the catalog file format; throws Error(Parse) or Error(InvalidCatalog).
  static Catalog parse(std::string_view text);

  /// The catalog shipped with the library (pt, P^1..P^4, curves, ruled
  /// surfaces, rational surfaces, K3 and abelian labels).
  static const Catalog& builtin();
  static std::string_view builtin_text();

  bool contains(std::string_view name) const;
  const CatalogEntry& entry(std::string_view name) const;
  const AtomicLabel& at(std::string_view name) const { return entry(name).label; }
  std::vector<std::string> names() const;
  std::size_t size() const noexcept { return entries_.size(); }

  /// Expandable labels give their L-polynomial; opaque labels give themselves.
  VarElement expand(std::string_view name) const;

  /// K0(sGT) class: euler * [pt] for expandable labels, the (recursively
  /// reduced) SOD expansion for opaque labels that have one, else the label.
  const SgtElement& sgt_class(std::string_view name) const;

  /// Dimension of a product: sum of label dimensions.
  int monomial_dim(const ClassMonomial& monomial) const;

  /// Serializes in the catalog file format (entries in name order).
  std::string to_text() const;

 private:
  std::map<std::string, CatalogEntry, std::less<>> entries_;
  std::map<std::string, SgtElement, std::less<>> sgt_classes_;
};

/// Class of the smooth complete toric variety with face numbers `f`
/// (f[k] = number of k-dimensional cones, f[0] = 1):  sum_k f[k] (L-1)^(d-k).
/// Throws Error(MalformedFVector).
VarElement toric_class(std::span<const Integer> f);
VarElement toric_class(std::initializer_list<long> f);

}  // namespace degenkit
