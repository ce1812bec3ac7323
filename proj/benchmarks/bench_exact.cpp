#include <benchmark/benchmark.h>

#include "catqi/bell.hpp"
#include "catqi/catalan.hpp"
#include "catqi/identities.hpp"

using namespace catqi;

namespace {

void BM_CatalanExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan_exact(n));
}
BENCHMARK(BM_CatalanExact)->RangeMultiplier(8)->Range(8, 4096);

void BM_CatalanCorollary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan_corollary(n));
}
BENCHMARK(BM_CatalanCorollary)->RangeMultiplier(8)->Range(8, 512);

void BM_BellRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = half_falling_args(n);
  for (auto _ : state) benchmark::DoNotOptimize(bell_recurrence(x, n, n / 2));
}
BENCHMARK(BM_BellRecurrence)->RangeMultiplier(2)->Range(8, 64);

void BM_BellClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bell_half_closed(n, n / 2));
}
BENCHMARK(BM_BellClosed)->RangeMultiplier(2)->Range(8, 64);

void BM_Lemma3Suite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma3_sums(n).passed());
}
BENCHMARK(BM_Lemma3Suite)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
