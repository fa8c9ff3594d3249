#include <benchmark/benchmark.h>

#include "leavitt/lpa.hpp"

namespace {

leavitt::Quiver loops(int count) {
  std::string text = "quiver loops\nvertex 1\narrow a1 : 1 -> 1 associated\n";
  for (int k = 2; k <= count; ++k) text += "arrow a" + std::to_string(k) + " : 1 -> 1\n";
  return leavitt::parse_quiver(text);
}

/// Product of two random elements; range(0) is the loop count, range(1) the length bound.
void BM_Multiply(benchmark::State& state) {
  leavitt::LeavittAlgebra b(loops(static_cast<int>(state.range(0))));
  int bound = static_cast<int>(state.range(1));
  leavitt::LpaElement x = b.random_element(1, -bound, bound, bound, 8);
  leavitt::LpaElement y = b.random_element(2, -bound, bound, bound, 8);
  for (auto _ : state) benchmark::DoNotOptimize(b.multiply(x, y));
}
BENCHMARK(BM_Multiply)->ArgsProduct({{1, 2, 3}, {2, 4, 6}});

void BM_BasisTerms(benchmark::State& state) {
  leavitt::LeavittAlgebra b(loops(2));
  for (auto _ : state) benchmark::DoNotOptimize(b.basis_terms(0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BasisTerms)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
