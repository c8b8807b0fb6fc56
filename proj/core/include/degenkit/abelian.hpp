#pragma once

// Homomorphisms A x A^t -> B x B^t in the integer homology-lattice model,
// and the class of the special fiber of a Kunnemann model from its
// torus-orbit data.

#include <string>
#include <vector>

#include "degenkit/catalog.hpp"
#include "degenkit/keyvalue.hpp"
#include "degenkit/matrix.hpp"

namespace degenkit {

/// f = (alpha beta; gamma delta); each block is a (2g_B x 2g_A) integer matrix.
struct BlockHom {
  IntMatrix alpha, beta, gamma, delta;

  /// Throws Error(ShapeMismatch) unless all four blocks share one nonempty
  /// shape with even row and column counts.
  void check_shape() const;
  std::size_t source_rank() const { return alpha.cols(); }
  std::size_t target_rank() const { return alpha.rows(); }

  IntMatrix to_matrix() const;
  static BlockHom from_matrix(const IntMatrix& m, std::size_t target_rank, std::size_t source_rank);

  friend bool operator==(const BlockHom&, const BlockHom&) = default;
};

/// (delta^T, -beta^T; -gamma^T, alpha^T).
BlockHom f_tilde(const BlockHom& f);

/// f o g as a block matrix product; throws Error(ShapeMismatch).
BlockHom compose(const BlockHom& f, const BlockHom& g);

/// f~ f = id and f f~ = id. Throws Error(ShapeMismatch) when g_A != g_B.
bool is_symplectic(const BlockHom& f);

BlockHom parse_block_hom(std::string_view text);
std::string write_block_hom(const BlockHom& f);

struct ToricOrbit {
  long cone_dim = 1;
  std::vector<Integer> f_vector;  // of the closed toric stratum Z, dim Z = r + 1 - cone_dim
};

struct KunnemannOrbitData {
  long torus_rank = 1;
  std::string abelian_label = "pt";
  bool good_reduction = false;
  std::vector<ToricOrbit> orbits;  // one record per Y-orbit of cones
};

/// Throws Error(BadOrbit) on inconsistent orbit records.
void check_orbit_data(const KunnemannOrbitData& data);

struct KunnemannClass {
  VarElement var;
  SgtElement sgt;
  VarElement reduced;  // var with L -> 1
};

/// Good reduction: [A0]. Otherwise V = sum over orbits of
/// (-1)^(s-1) s [A0] [Z], s the cone dimension.
/// Throws Error(UnknownLabel) or Error(BadOrbit).
KunnemannClass kunnemann_rho(const KunnemannOrbitData& data, const Catalog& catalog);

/// Header keys torus_rank, abelian_label, good_reduction (true/false) and one
/// bare line `s f0 f1 ... fd` per orbit.
KunnemannOrbitData parse_orbit_data(std::string_view text);

}  // namespace degenkit
