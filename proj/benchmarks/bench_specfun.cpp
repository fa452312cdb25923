#include <benchmark/benchmark.h>

#include "pauli_ds/specfun.hpp"

using namespace pauli_ds;

static void BM_Hyp2f1Polynomial(benchmark::State& state) {
  const HypParams p(-static_cast<int>(state.range(0)), state.range(0) + 3.0, 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(p, 0.73));
}
BENCHMARK(BM_Hyp2f1Polynomial)->Arg(1)->Arg(4)->Arg(16);

static void BM_Hyp2f1Series(benchmark::State& state) {
  const HypParams p(cplx(1.5, -1.0), cplx(1.5, 1.0), 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(p, 0.35));
}
BENCHMARK(BM_Hyp2f1Series);

static void BM_Hyp2f1Pfaff(benchmark::State& state) {
  const HypParams p(cplx(1.5, -1.0), cplx(1.5, 1.0), 2.5);
  const double y = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(p, y));
}
BENCHMARK(BM_Hyp2f1Pfaff)->Arg(1)->Arg(10)->Arg(100);

static void BM_Hyp2f1Connection(benchmark::State& state) {
  const HypParams p(0.3, 0.7, 1.9);
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(p, 0.8));
}
BENCHMARK(BM_Hyp2f1Connection);
