#include <benchmark/benchmark.h>

#include "leavitt/complex.hpp"
#include "leavitt/injective.hpp"

namespace {

const leavitt::Quiver& two_loops() {
  static const leavitt::Quiver q = leavitt::parse_quiver(
      "quiver two_loops\nvertex 1\narrow a1 : 1 -> 1 associated\narrow a2 : 1 -> 1\n");
  return q;
}

void BM_BuildWindow(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(leavitt::build_window(two_loops(), -2, 2, N));
}
BENCHMARK(BM_BuildWindow)->DenseRange(2, 8, 2);

void BM_Acyclicity(benchmark::State& state) {
  leavitt::ComplexWindow w = leavitt::build_window(two_loops(), -2, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(leavitt::verify_acyclicity(w));
}
BENCHMARK(BM_Acyclicity)->DenseRange(2, 6, 2);

void BM_RandomQuiverWindow(benchmark::State& state) {
  leavitt::Quiver q = leavitt::random_quiver(static_cast<std::uint64_t>(state.range(0)), 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(leavitt::build_window(q, -2, 2, 4));
}
BENCHMARK(BM_RandomQuiverWindow)->DenseRange(1, 5);

void BM_Nakayama(benchmark::State& state) {
  int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(leavitt::nakayama_compare(two_loops(), L, L));
}
BENCHMARK(BM_Nakayama)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
