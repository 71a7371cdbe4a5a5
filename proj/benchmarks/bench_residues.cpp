#include <benchmark/benchmark.h>

#include "congruence/bernoulli.hpp"
#include "congruence/modular.hpp"
#include "congruence/stirling_harmonic.hpp"
#include "congruence/wilson.hpp"

using namespace congruence;

static void BM_FactorialModP3(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorial_mod_pk(p, 3));
}
BENCHMARK(BM_FactorialModP3)->Arg(1009)->Arg(10007)->Arg(100003);

static void BM_WilsonFermatDigits(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wilson_predict(p, WilsonMethod::FermatDigits));
}
BENCHMARK(BM_WilsonFermatDigits)->Arg(1009)->Arg(10007)->Arg(100003);

static void BM_HarmonicSumMod(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_sum_mod(p, 1, 3));
}
BENCHMARK(BM_HarmonicSumMod)->Arg(1009)->Arg(16843)->Arg(100003);

static void BM_BernoulliModP(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_mod_p(static_cast<std::int64_t>(p) - 3, p));
}
BENCHMARK(BM_BernoulliModP)->Arg(1009)->Arg(10007);

static void BM_BernoulliExactFresh(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    BernoulliTable table;
    benchmark::DoNotOptimize(table.get(n));
  }
}
BENCHMARK(BM_BernoulliExactFresh)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_PrimeSieve(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(modular::primes_in_range(2, hi));
}
BENCHMARK(BM_PrimeSieve)->Arg(10'000)->Arg(1'000'000);
