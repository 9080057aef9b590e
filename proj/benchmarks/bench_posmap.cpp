#include <benchmark/benchmark.h>

#include "posmap/certify.hpp"
#include "posmap/choifamily.hpp"
#include "posmap/linalg.hpp"
#include "posmap/random.hpp"
#include "posmap/symmetry.hpp"

using namespace posmap;

static void BM_EigHermitian(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->Arg(3)->Arg(9)->Arg(16);

static void BM_BlockPositivity(benchmark::State& state) {
  const BipartiteOperator rho = rho_lambda(0.5);
  SeeSawOptions opts;
  opts.restarts = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(block_positivity(rho, opts));
}
BENCHMARK(BM_BlockPositivity)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_AlphaNorm(benchmark::State& state) {
  const BipartiteOperator wm = w_minus();
  for (auto _ : state) benchmark::DoNotOptimize(alpha_norm(wm));
}
BENCHMARK(BM_AlphaNorm)->Unit(benchmark::kMillisecond);

static void BM_Reduce(benchmark::State& state) {
  const BipartiteOperator s = random_symmetry_in_D(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_transposition(s));
}
BENCHMARK(BM_Reduce);

BENCHMARK_MAIN();
