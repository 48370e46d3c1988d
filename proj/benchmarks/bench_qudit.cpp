#include <benchmark/benchmark.h>

#include "qudit/angular.hpp"
#include "qudit/bases.hpp"
#include "qudit/bloch.hpp"
#include "qudit/states.hpp"
#include "qudit/witness.hpp"

using namespace qudit;

namespace {

void BM_BasisConstruction(benchmark::State& state, BasisFamily family) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_basis(family, d));
}
BENCHMARK_CAPTURE(BM_BasisConstruction, ggm, BasisFamily::GGM)->RangeMultiplier(2)->Range(2, 16);
BENCHMARK_CAPTURE(BM_BasisConstruction, pob, BasisFamily::POB)->RangeMultiplier(2)->Range(2, 16);
BENCHMARK_CAPTURE(BM_BasisConstruction, wob, BasisFamily::WOB)->RangeMultiplier(2)->Range(2, 16);

void BM_Decompose(benchmark::State& state, BasisFamily family) {
  const int d = static_cast<int>(state.range(0));
  const auto rho = random_density_matrix(d, 1);
  shared_basis(family, d);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(rho, family));
}
BENCHMARK_CAPTURE(BM_Decompose, ggm, BasisFamily::GGM)->RangeMultiplier(2)->Range(2, 16);
BENCHMARK_CAPTURE(BM_Decompose, pob, BasisFamily::POB)->RangeMultiplier(2)->Range(2, 16);
BENCHMARK_CAPTURE(BM_Decompose, wob, BasisFamily::WOB)->RangeMultiplier(2)->Range(2, 16);

void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = random_density_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho.matrix()));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(4, 64);

void BM_ClebschGordan(benchmark::State& state) {
  const int twice_j = static_cast<int>(state.range(0));
  const auto j = HalfInteger::from_twice(twice_j);
  const CgLabel label{j, j, j, -j, HalfInteger::from_int(0), HalfInteger::from_int(0)};
  for (auto _ : state) benchmark::DoNotOptimize(clebsch_gordan_uncached(label));
}
BENCHMARK(BM_ClebschGordan)->Arg(1)->Arg(9)->Arg(31);

void BM_VerifyWitness(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto w = optimal_witness_iso(d);
  for (auto _ : state) benchmark::DoNotOptimize(verify_witness(w, d, 1000, 7));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_VerifyWitness)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
