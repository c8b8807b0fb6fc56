#pragma once

// Mukai lattice arithmetic, period points, and monodromy classification.
//
// Basis order of the rank-24 lattice: index 0 is H^0, indices 1..22 are H^2
// laid out as E8(-1), E8(-1), U, U, U, and index 23 is H^4. The H^0/H^4 pair
// carries the form [[0,-1],[-1,0]], so that the flattened Gram form reproduces
//   <(a0,a1,a2),(b0,b1,b2)> = a1.b1 - a0.b2 - a2.b0.

#include <cstddef>
#include <string_view>

#include "degenkit/matrix.hpp"

namespace degenkit {

struct IntegerLattice {
  IntMatrix gram;

  std::size_t rank() const noexcept { return gram.rows(); }
};

namespace mukai_basis {
inline constexpr std::size_t kH0 = 0;
inline constexpr std::size_t kH2Begin = 1;
inline constexpr std::size_t kE8First = 1;   // 1..8
inline constexpr std::size_t kE8Second = 9;  // 9..16
inline constexpr std::size_t kU1 = 17;       // 17,18
inline constexpr std::size_t kU2 = 19;       // 19,20
inline constexpr std::size_t kU3 = 21;       // 21,22
inline constexpr std::size_t kH4 = 23;
inline constexpr std::size_t kRank = 24;
inline constexpr std::size_t kH2Rank = 22;
}  // namespace mukai_basis

/// Cartan matrix of E8 (positive definite, Bourbaki numbering).
IntMatrix e8_cartan();
/// Hyperbolic plane U = [[0,1],[1,0]].
IntMatrix hyperbolic_plane();

/// H^2 of a K3 surface: E8(-1)^2 ⊕ U^3, rank 22.
IntegerLattice k3_lattice();
/// The Mukai lattice, rank 24.
IntegerLattice mukai_lattice();

bool is_even(const IntegerLattice& lattice);

struct MukaiVector {
  Integer a0;
  IntVector a1;  // length 22
  Integer a2;

  /// Coordinates in the rank-24 basis order.
  IntVector flatten() const;
};

/// a1·G·b1 - a0·b2 - a2·b0; throws Error(DimensionMismatch).
Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b, const IntMatrix& h2_gram);

/// mᵀ·G·m == G; throws Error(DimensionMismatch) if m is not rank×rank.
bool is_isometry(const IntMatrix& m, const IntegerLattice& lattice);

/// Inverse of an isometry of a unimodular lattice: G⁻¹·mᵀ·G.
IntMatrix isometry_inverse(const IntMatrix& m, const IntegerLattice& lattice);

/// Reflection x ↦ x - 2(x·v)/(v·v) v for a vector with v·v = ±2.
/// Throws Error(DimensionMismatch) for other norms.
IntMatrix reflection(const IntVector& v, const IntegerLattice& lattice);

/// σ = re + i·im spanning F².
struct PeriodPoint {
  RatVector re;
  RatVector im;
};

/// Q(x,x) = Q(y,y), Q(x,y) = 0, Q(x,x)+Q(y,y) > 0. A zero vector is not a
/// period. Throws Error(DimensionMismatch) on wrong lengths.
bool is_period_point(const PeriodPoint& p, const IntegerLattice& lattice);

/// m is an isometry and m·σ_X lies on the line spanned by σ_Y (all 2×2
/// minors of [m·σ_X | σ_Y] vanish over Q(i)). Throws Error(InvalidPeriod)
/// when either period fails is_period_point.
bool is_hodge_isometry(const IntMatrix& m, const PeriodPoint& x, const PeriodPoint& y, const IntegerLattice& lattice);

enum class KulikovType { I, II, III };

std::string_view to_string(KulikovType type);

/// Type by the least i <= 3 with (T - id)^i = 0. Throws Error(NotKulikov)
/// if (T - id)^3 != 0, Error(DimensionMismatch) if T is not square.
KulikovType classify_monodromy(const IntMatrix& t);

}  // namespace degenkit
