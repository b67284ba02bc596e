#include <benchmark/benchmark.h>

#include "ans/affine.hpp"
#include "ans/closure.hpp"
#include "ans/green.hpp"

namespace {
  void BM_AffineGenerators(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(ans::enumerate_aff(n));
    }
  }
  BENCHMARK(BM_AffineGenerators)->DenseRange(2, 4);

  void BM_Closure(benchmark::State& state) {
    ans::ClosureOptions opts;
    opts.jobs     = static_cast<std::size_t>(state.range(1));
    auto const n  = static_cast<std::size_t>(state.range(0));
    auto const gens = ans::enumerate_aff(n);
    for (auto _ : state) {
      auto ns = ans::additive_closure(gens, opts);
      benchmark::DoNotOptimize(ns);
    }
  }
  BENCHMARK(BM_Closure)
      ->ArgsProduct({{2, 3, 4}, {1, 4}})
      ->Unit(benchmark::kMillisecond);

  void BM_GreenBrute(benchmark::State& state) {
    auto const ns = ans::affine_near_semiring(static_cast<std::size_t>(state.range(0)));
    auto const reduct = state.range(1) == 0 ? ns.additive() : ns.multiplicative();
    for (auto _ : state) {
      benchmark::DoNotOptimize(ans::green_brute(reduct));
    }
  }
  BENCHMARK(BM_GreenBrute)
      ->ArgsProduct({{2, 3}, {0, 1}})
      ->Unit(benchmark::kMillisecond);
}

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
    return 1;
  }
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
