#include <benchmark/benchmark.h>

#include "catqi/catalan.hpp"
#include "catqi/integral_reps.hpp"

using namespace catqi;

namespace {

// Integral routes at the default relative tolerance; evaluation counts are
// reported alongside the time.

void BM_SecondKindIntegral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t evals = 0;
  for (auto _ : state) {
    const QuadResult r = cq2_integral(Params(0.5, 0.25), n);
    evals = r.evaluations;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["evals"] = static_cast<double>(evals);
}
BENCHMARK(BM_SecondKindIntegral)->DenseRange(0, 20, 5);

void BM_GenFuncEndpoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_func_integral(Params(1.0, 4.0), 4.0).value);
}
BENCHMARK(BM_GenFuncEndpoint);

void BM_DerivativeInB(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cq2_function_db(Params(1.0, 2.0), 0.5, m).value);
}
BENCHMARK(BM_DerivativeInB)->DenseRange(0, 3);

void BM_FirstKindFinite(benchmark::State& state) {
  const CQ1Params p{PosReal(0.5), PosReal(2.0)};
  for (auto _ : state) benchmark::DoNotOptimize(cq1_integral_finite(p, 7.5).value);
}
BENCHMARK(BM_FirstKindFinite);

void BM_FirstKindSemiInfinite(benchmark::State& state) {
  const CQ1Params p{PosReal(0.5), PosReal(2.0)};
  for (auto _ : state) benchmark::DoNotOptimize(cq1_integral_infinite(p, 7.5).value);
}
BENCHMARK(BM_FirstKindSemiInfinite);

}  // namespace
