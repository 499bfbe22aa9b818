#include <benchmark/benchmark.h>

#include "adlab/complex_gamma.hpp"

static void BM_LnGammaCriticalLine(benchmark::State& state) {
  const adlab::Complex z{0.5, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(adlab::ln_gamma(z));
}
BENCHMARK(BM_LnGammaCriticalLine)->Arg(1)->Arg(30)->Arg(1000);

static void BM_LnGammaLeftHalfPlane(benchmark::State& state) {
  const adlab::Complex z{-15.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(adlab::ln_gamma(z));
}
BENCHMARK(BM_LnGammaLeftHalfPlane);

static void BM_Digamma(benchmark::State& state) {
  const adlab::Complex z{0.5, 10.0};
  for (auto _ : state) benchmark::DoNotOptimize(adlab::digamma(z));
}
BENCHMARK(BM_Digamma);
