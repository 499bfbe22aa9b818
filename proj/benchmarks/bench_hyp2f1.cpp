#include <benchmark/benchmark.h>

#include "adlab/hyp2f1.hpp"
#include "adlab/lambda_theta.hpp"
#include "adlab/mb_integral.hpp"

static void BM_Series(benchmark::State& state) {
  const adlab::HypPoint p(10.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(adlab::f21_series(p));
}
BENCHMARK(BM_Series);

static void BM_Pfaff(benchmark::State& state) {
  const adlab::HypPoint p(10.0, 20.0);
  for (auto _ : state) benchmark::DoNotOptimize(adlab::f21_pfaff(p));
}
BENCHMARK(BM_Pfaff);

static void BM_MellinBarnes(benchmark::State& state) {
  const adlab::HypPoint p(static_cast<double>(state.range(0)), 1000.0);
  for (auto _ : state) benchmark::DoNotOptimize(adlab::f21_mellin_barnes(p));
}
BENCHMARK(BM_MellinBarnes)->Arg(5)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_IntegralI(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(adlab::integral_I(20.0, 100.0));
}
BENCHMARK(BM_IntegralI)->Unit(benchmark::kMillisecond);

static void BM_Lambda(benchmark::State& state) {
  const adlab::LambdaPoint p(static_cast<double>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(adlab::lambda(p));
}
BENCHMARK(BM_Lambda)->Arg(2)->Arg(50)->Unit(benchmark::kMillisecond);
