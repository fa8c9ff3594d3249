#include <benchmark/benchmark.h>

#include "leavitt/homology.hpp"

namespace {

const leavitt::Quiver& two_loops() {
  static const leavitt::Quiver q = leavitt::parse_quiver(
      "quiver two_loops\nvertex 1\narrow a1 : 1 -> 1 associated\narrow a2 : 1 -> 1\n");
  return q;
}

/// Decomposition, extraction and homotopy for one perturbed cocycle of degree range(1).
void BM_Homotopy(benchmark::State& state) {
  leavitt::RightAction action{leavitt::LeavittAlgebra(two_loops())};
  const leavitt::LeavittAlgebra& b = action.algebra();
  leavitt::HomWindow w(two_loops(), static_cast<int>(state.range(0)));
  int n = static_cast<int>(state.range(1));
  leavitt::LpaElement x0 = b.random_element(1, n, n, w.N, 3);
  leavitt::HomElement y = leavitt::rho(action, x0, n, w);
  y += leavitt::coboundary(w, leavitt::random_hom(w, n - 1, w.N - 1, 2));
  for (auto _ : state) {
    leavitt::CocycleDecomposition d = leavitt::decompose_cocycle(b, y, w);
    leavitt::ExtractedX ex = leavitt::extract_x(b, d, w);
    benchmark::DoNotOptimize(leavitt::build_homotopy(action, y, d, ex.x, w));
  }
}
BENCHMARK(BM_Homotopy)->ArgsProduct({{3, 4, 5}, {0, 1}});

void BM_Rho(benchmark::State& state) {
  leavitt::RightAction action{leavitt::LeavittAlgebra(two_loops())};
  leavitt::HomWindow w(two_loops(), static_cast<int>(state.range(0)));
  leavitt::LpaElement x = action.algebra().random_element(3, 1, 1, w.N, 4);
  for (auto _ : state) benchmark::DoNotOptimize(leavitt::rho(action, x, 1, w));
}
BENCHMARK(BM_Rho)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
