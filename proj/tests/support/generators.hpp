#pragma once

// Seeded random generators shared by the unit, property and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "degenkit/abelian.hpp"
#include "degenkit/blowup.hpp"
#include "degenkit/catalog.hpp"
#include "degenkit/mukai.hpp"
#include "degenkit/snc_model.hpp"

namespace degenkit::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);

/// At most `max_terms` terms, coefficients in [-9, 9], L-exponents <= 3,
/// monomials over `labels` of length <= 2.
VarElement random_var_element(Rng& rng, const std::vector<std::string>& labels, int max_terms = 6);

/// Random element whose every term has dimension <= dim and at least one
/// term of dimension exactly dim with positive coefficient.
VarElement random_class_of_dim(Rng& rng, int dim, const Catalog& catalog);

/// Face-closed model with 1..max_components components obeying the
/// dimension law; every stratum class is drawn by random_class_of_dim.
SncModel random_model(Rng& rng, const Catalog& catalog, int max_components = 5);

/// Applies up to `max_moves` random admissible blow-ups (fewer if the model
/// runs out of centers); new ids are prefix + counter.
SncModel random_blowup_chain(Rng& rng, SncModel model, int max_moves, const std::string& prefix = "X");

/// Product of random generators of O(L): block permutations of identical
/// summands, e <-> f swaps and sign flips on U summands, -id, and
/// reflections in roots of E8(-1) and in e ± f. `lattice` must be
/// k3_lattice() or mukai_lattice().
IntMatrix random_isometry(Rng& rng, const IntegerLattice& lattice, int generators = 8);

BlockHom random_block_hom(Rng& rng, std::size_t target_rank, std::size_t source_rank, long bound = 3);

/// Symplectic f built as products of (I, B; 0, I) with B symmetric,
/// (I, 0; C, I) with C symmetric, and (U, 0; 0, U^-T) with U unimodular.
BlockHom random_symplectic(Rng& rng, std::size_t rank, int factors = 4);

/// Orbit data of a torus degeneration together with the explicit snc model
/// whose strata are the closed orbits times [A0].
struct OrbitScenario {
  KunnemannOrbitData data;
  SncModel model;
};

/// Cycle of n lines (torus_rank 1).
OrbitScenario cycle_scenario(long n, const std::string& abelian_label, const Catalog& catalog);

/// Triangulated m x k torus grid with random diagonals (torus_rank 2).
OrbitScenario torus_grid_scenario(Rng& rng, long m, long k, const std::string& abelian_label, const Catalog& catalog);

}  // namespace degenkit::testing
