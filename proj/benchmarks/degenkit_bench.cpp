#include <benchmark/benchmark.h>

#include "degenkit/abelian.hpp"
#include "degenkit/blowup.hpp"
#include "degenkit/mukai.hpp"
#include "degenkit/snc_model.hpp"
#include "generators.hpp"

namespace {

using namespace degenkit;

void BM_RingProduct(benchmark::State& state) {
  testing::Rng rng(1);
  const std::vector<std::string> labels{"E", "P1", "P2", "K3_X", "Ab2"};
  VarElement a = VarElement(1);
  VarElement b = VarElement(1);
  for (int i = 0; i < state.range(0); ++i) {
    a += testing::random_var_element(rng, labels, 6);
    b += testing::random_var_element(rng, labels, 6);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
}
BENCHMARK(BM_RingProduct)->Arg(1)->Arg(4)->Arg(16);

// Simplex on n vertices: all 2^n - 1 faces are strata.
SncModel simplex(int n) {
  std::vector<Component> components;
  std::map<Face, VarElement> strata;
  for (int i = 1; i <= n; ++i) components.push_back({ComponentId(std::to_string(i)), 1, VarElement::lefschetz_sum(n)});
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<ComponentId> ids;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) ids.emplace_back(std::to_string(i + 1));
    }
    strata.emplace(make_face(ids), VarElement::lefschetz_sum(n + 1 - static_cast<int>(ids.size())));
  }
  return SncModel(n - 1, std::move(components), std::move(strata));
}

void BM_RhoVar(benchmark::State& state) {
  const SncModel m = simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rho_var(m));
}
BENCHMARK(BM_RhoVar)->DenseRange(2, 8, 2);

void BM_RhoSgt(benchmark::State& state) {
  const SncModel m = simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rho_sgt(m, Catalog::builtin()));
}
BENCHMARK(BM_RhoSgt)->DenseRange(2, 8, 2);

void BM_BlowupChain(benchmark::State& state) {
  const SncModel m = simplex(4);
  for (auto _ : state) {
    testing::Rng rng(7);
    benchmark::DoNotOptimize(testing::random_blowup_chain(rng, m, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BlowupChain)->Arg(1)->Arg(4)->Arg(16);

void BM_MukaiSignature(benchmark::State& state) {
  const IntegerLattice l = mukai_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(signature(l.gram));
}
BENCHMARK(BM_MukaiSignature);

void BM_IsIsometry(benchmark::State& state) {
  testing::Rng rng(3);
  const IntegerLattice l = mukai_lattice();
  const IntMatrix g = testing::random_isometry(rng, l, 16);
  for (auto _ : state) benchmark::DoNotOptimize(is_isometry(g, l));
}
BENCHMARK(BM_IsIsometry);

void BM_ClassifyMonodromy(benchmark::State& state) {
  IntMatrix t = IntMatrix::identity(22);
  t(0, 1) = 1;
  t(1, 2) = 1;
  for (auto _ : state) benchmark::DoNotOptimize(classify_monodromy(t));
}
BENCHMARK(BM_ClassifyMonodromy);

void BM_IsSymplectic(benchmark::State& state) {
  testing::Rng rng(5);
  const BlockHom f = testing::random_symplectic(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_symplectic(f));
}
BENCHMARK(BM_IsSymplectic)->Arg(2)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
