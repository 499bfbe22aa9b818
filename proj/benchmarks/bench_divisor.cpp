#include <benchmark/benchmark.h>

#include <cstdint>

#include "adlab/divisor_lab.hpp"

static void BM_Sieve(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adlab::sieve_divisor_counts(n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Sieve)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_Correlation(benchmark::State& state) {
  const auto table = adlab::sieve_divisor_counts((1 << 20) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(adlab::divisor_correlation(table, 1 << 20, 1));
}
BENCHMARK(BM_Correlation)->Unit(benchmark::kMillisecond);

static void BM_ErrorProfile(benchmark::State& state) {
  const auto table = adlab::sieve_divisor_counts((1 << 16) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(adlab::error_profile(table, 1 << 16, 1));
}
BENCHMARK(BM_ErrorProfile)->Unit(benchmark::kMillisecond);
