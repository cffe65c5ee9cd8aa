#include <benchmark/benchmark.h>

#include "bargmann/kernel.hpp"
#include "bargmann/symbols.hpp"

using namespace bargmann;

namespace {

void BM_ConventionReport(benchmark::State& state) {
  const SpaceParams p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(convention_report(p));
}
BENCHMARK(BM_ConventionReport)->Args({1, 4})->Args({3, 8})->Args({2, 16})->Unit(benchmark::kMicrosecond);

void BM_SymbolEval(benchmark::State& state) {
  const SymbolEvaluator eval(SpaceParams(1, static_cast<int>(state.range(0))), SymbolRep::Oracle);
  double u = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(u));
    u = u < 60.0 ? u + 0.37 : 0.0;
  }
}
BENCHMARK(BM_SymbolEval)->Arg(1)->Arg(8);

void BM_KernelSeries(benchmark::State& state) {
  const SpaceParams p(2, 2);
  const CPoint z{Complex(0.3, 0.4), Complex(-0.5, 0.1)};
  const CPoint w{Complex(-0.2, 0.7), Complex(0.6, -0.3)};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_series(p, z, w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KernelSeries)->Arg(20)->Arg(80)->Unit(benchmark::kMicrosecond);

}  // namespace
