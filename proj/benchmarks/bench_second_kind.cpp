#include <benchmark/benchmark.h>

#include "catqi/second_kind.hpp"

using namespace catqi;

namespace {

const RationalParams kParams(BigRat(BigInt(1), BigInt(4)), BigRat(BigInt(9), BigInt(4)));
const RationalParams kIrrational(BigRat(1), BigRat(2));

void BM_ExplicitExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cq2_explicit(kIrrational, n));
}
BENCHMARK(BM_ExplicitExact)->RangeMultiplier(4)->Range(4, 256);

void BM_SeriesExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cq2_series(kIrrational, n));
}
BENCHMARK(BM_SeriesExact)->RangeMultiplier(4)->Range(4, 64);

void BM_ExplicitFloat(benchmark::State& state) {
  const Params p(kParams);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cq2_explicit_float(p, n));
}
BENCHMARK(BM_ExplicitFloat)->RangeMultiplier(8)->Range(8, 4096);

void BM_SeriesFloat(benchmark::State& state) {
  const Params p(kParams);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cq2_series_float(p, n));
}
BENCHMARK(BM_SeriesFloat)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
