#include <benchmark/benchmark.h>

#include <cmath>

#include "bargmann/transform.hpp"

using namespace bargmann;

namespace {

GridFunction2D bump_grid(int nodes) {
  return GridFunction2D::sample(nodes, nodes, -10, 10, -10, 10,
                                [](Complex w) { return Complex(std::exp(-std::norm(w))); });
}

void BM_Spectral(benchmark::State& state) {
  const GridFunction2D g = bump_grid(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(berezin_spectral(g, m));
  state.SetItemsProcessed(state.iterations() * g.nx * g.ny);
}
BENCHMARK(BM_Spectral)->Args({128, 0})->Args({128, 3})->Args({256, 3})->Unit(benchmark::kMillisecond);

// Cost per evaluated point, for comparison with a full spectral pass.
void BM_DirectPerPoint(benchmark::State& state) {
  const GridFunction2D g = bump_grid(161);
  const int m = static_cast<int>(state.range(0));
  const std::vector<Complex> pts{Complex(0.3, -0.2)};
  for (auto _ : state) benchmark::DoNotOptimize(berezin_direct(g, m, pts));
}
BENCHMARK(BM_DirectPerPoint)->Arg(0)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_TildeDelta(benchmark::State& state) {
  const GridFunction2D g = bump_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tilde_delta_apply(g));
}
BENCHMARK(BM_TildeDelta)->Arg(161)->Arg(321);

}  // namespace
