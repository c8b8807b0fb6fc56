#pragma once

// Special fibers of snc models, recorded as class-labeled dual complexes.
//
// A model has components D_i (i in I) with multiplicities, and for each
// nonempty J ⊆ I either nothing (D_J empty) or the class [D_J] in K0(Var).
// Everything downstream works at the level of classes only.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/catalog.hpp"
#include "degenkit/ring.hpp"

namespace degenkit {

/// Component identifier. Purely numeric ids order numerically and precede
/// all other ids, which order lexicographically.
class ComponentId {
 public:
  ComponentId() = default;
  explicit ComponentId(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend std::strong_ordering operator<=>(const ComponentId& a, const ComponentId& b);
  friend bool operator==(const ComponentId& a, const ComponentId& b) { return a.value_ == b.value_; }

 private:
  std::string value_;
};

bool is_valid_component_id(std::string_view text);

/// Sorted set of component ids.
using Face = std::vector<ComponentId>;

Face make_face(std::vector<ComponentId> ids);
Face make_face(std::initializer_list<std::string_view> ids);
/// "1,3" -> {1, 3}; throws Error(Parse) on malformed or repeated ids.
Face parse_face(std::string_view text);
std::string face_to_string(const Face& face);
bool is_subface(const Face& small, const Face& big);

struct Component {
  ComponentId id;
  long multiplicity = 1;
  VarElement cls;

  friend bool operator==(const Component&, const Component&) = default;
};

class SncModel {
 public:
  SncModel() = default;

  /// `strata` may omit singletons; they default to the component classes.
  /// Faces listed in `strata` are nonempty strata; all others are empty.
  SncModel(int generic_dim, std::vector<Component> components, std::map<Face, VarElement> strata);

  int generic_dim() const noexcept { return generic_dim_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  const std::map<Face, VarElement>& strata() const noexcept { return strata_; }

  const Component* component(const ComponentId& id) const;
  /// nullptr when D_J is empty.
  const VarElement* stratum(const Face& face) const;

  friend bool operator==(const SncModel&, const SncModel&) = default;

 private:
  int generic_dim_ = 0;
  std::vector<Component> components_;  // sorted by id
  std::map<Face, VarElement> strata_;
};

struct Violation {
  std::string rule;  // "face closure", "dimension law", ...
  Face face;
  std::string detail;

  std::string to_string() const;
};

/// Checks every model invariant; labels are looked up in `catalog` for the
/// dimension law. An empty result means the model is valid.
std::vector<Violation> validate(const SncModel& model, const Catalog& catalog);

/// Catalog-free subset of validate (ids, singleton classes, face closure,
/// stratum size). The class computations below throw Error(InvalidModel)
/// when this finds anything.
std::vector<Violation> validate_structure(const SncModel& model);

/// [D_J°] = sum over nonempty J' ⊇ J of (-1)^{|J'|-|J|} [D_J'].
/// Throws Error(EmptyStratum) when D_J is empty.
VarElement open_stratum_class(const SncModel& model, const Face& face);

/// sum over J of (1-L)^{|J|-1} [D_J°].
VarElement rho_var(const SncModel& model);

/// sum over J of (-1)^{|J|-1} [P(N_{D_J})], with [P(N_{D_J})] = (1+...+L^{|J|-1}) [D_J].
VarElement rho_var_via_bundles(const SncModel& model);

/// sum over J of (-1)^{|J|-1} |J| [D_J], the K0(Var) lift that rho_sgt pushes through mu.
VarElement rho_sgt_lift(const SncModel& model);

/// mu(rho_sgt_lift(model)).
SgtElement rho_sgt(const SncModel& model, const Catalog& catalog);

/// Class of the reduced special fiber: sum over J of (-1)^{|J|-1} [D_J].
VarElement special_fiber_class(const SncModel& model);

}  // namespace degenkit
