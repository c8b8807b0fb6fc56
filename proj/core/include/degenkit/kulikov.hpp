#pragma once

// Builders turning Kulikov type II / III combinatorial data into snc models.
//
// Type II file:                     Type III file:
//   kind = kulikov-ii                 kind = kulikov-iii
//   r = 2                             [vertices]
//   end_eulers = 12, 12               1 = 3
//   elliptic_label = E                ...
//   ruled_label = RuledE   # opt.     [edges]
//                                     1,2
//                                     [faces]
//                                     1,2,3

#include <string>
#include <vector>

#include "degenkit/catalog.hpp"
#include "degenkit/keyvalue.hpp"
#include "degenkit/snc_model.hpp"

namespace degenkit {

struct TypeIIData {
  long r = 1;
  Integer first_end_euler = 12;
  Integer last_end_euler = 12;
  std::string elliptic_label = "E";
  /// Middle components; empty means "Ruled" + elliptic_label.
  std::string ruled_label;
};

struct TypeIIIData {
  std::vector<std::pair<ComponentId, Integer>> vertices;  // (id, euler number)
  std::vector<Face> edges;                                // double curves
  std::vector<Face> faces;                                // triple points
};

/// Catalog label of the rational surface with Euler number e.
std::string rational_surface_label(const Integer& euler);
/// 1 + (e-2) L + L^2.
VarElement rational_surface_class(const Integer& euler);

/// Chain V_0 ∪ ... ∪ V_r: rational ends, ruled middles, V_i ∩ V_{i+1} the
/// elliptic curve. Throws Error(BadChain) or Error(UnknownLabel).
SncModel build_type_ii(const TypeIIData& data, const Catalog& catalog);

struct TypeIIIModel {
  SncModel model;
  std::vector<std::string> warnings;
};

/// Rational components, rational double curves (1 + L), triple points (1).
/// Throws Error(NotAComplex) when the data is not a simplicial 2-complex;
/// warns when V - E + F != 2.
TypeIIIModel build_type_iii(const TypeIIIData& data);

TypeIIData parse_type_ii(const kv::Document& doc);
TypeIIIData parse_type_iii(const kv::Document& doc);

/// For K3-type degenerations: a warning when the [pt] coefficient of rho is
/// nonzero, i.e. when the vanishing of e(V_0)+e(V_r) (type II) or of the
/// special fiber's Euler number (type III) fails for the given data.
std::vector<std::string> k3_euler_warnings(const SgtElement& rho);

}  // namespace degenkit
