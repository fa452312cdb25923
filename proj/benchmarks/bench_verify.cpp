#include <benchmark/benchmark.h>

#include "pauli_ds/verify.hpp"

using namespace pauli_ds;

static void BM_EigenvalueOracle(benchmark::State& state) {
  const Model ds = Model::expanding_ds(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue_oracle(ds, kHalf, 1, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EigenvalueOracle)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_ResidualSweep(benchmark::State& state) {
  const Model ds = Model::expanding_ds(1.0);
  const Grid grid = Grid::uniform(ds, static_cast<int>(state.range(0)), 9);
  const RadialMode mode = RadialMode::expanding_ds(ds, {HalfInt::from_twice(3), kHalf, 2, -1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_ode_residual(mode, grid));
    benchmark::DoNotOptimize(pauli_pde_residual(mode, grid));
    benchmark::DoNotOptimize(first_order_residual(mode, grid));
  }
}
BENCHMARK(BM_ResidualSweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_AdSRadial(benchmark::State& state) {
  const RadialMode mode =
      RadialMode::oscillating_ads(Model::oscillating_ads(1.0), {HalfInt::from_twice(3), kHalf, 0, 1}, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(radial_big(mode, 2.0));
}
BENCHMARK(BM_AdSRadial);
BENCHMARK_MAIN();
