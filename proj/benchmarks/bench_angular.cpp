#include <benchmark/benchmark.h>

#include "pauli_ds/angular.hpp"

using namespace pauli_ds;

static void BM_WignerSmallD(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_small_d(j, kHalf, -kHalf, 0.9));
}
BENCHMARK(BM_WignerSmallD)->Arg(1)->Arg(7)->Arg(21);

static void BM_SigmaAction(benchmark::State& state) {
  const QuantumNumbers qn{HalfInt::from_twice(5), kHalf, 0, 1};
  const Spinor4 f{1.0, cplx(0, 0.5), 0.5, -1.0};
  for (auto _ : state) benchmark::DoNotOptimize(sigma_action_residual(qn, f, 1.1, 0.4));
}
BENCHMARK(BM_SigmaAction);
