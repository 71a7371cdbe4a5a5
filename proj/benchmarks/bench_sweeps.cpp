#include <benchmark/benchmark.h>

#include "congruence/giuga.hpp"
#include "congruence/qanalog.hpp"
#include "congruence/verify.hpp"

using namespace congruence;

namespace {

RunOptions untimed() {
  RunOptions o;
  o.timing = false;
  return o;
}

}  // namespace

static void BM_SweepWilsonGlaisher(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep("wilson.glaisher", 5, hi, 1, untimed()));
}
BENCHMARK(BM_SweepWilsonGlaisher)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_SweepStirlingCube(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep("stirling.bernoulli_p3", 7, 60, 1, untimed()));
}
BENCHMARK(BM_SweepStirlingCube)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep("bernoulli.kummer", 5, 397, workers, untimed()));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_EnumerateCarmichael(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(CompositeKind::Carmichael, limit));
}
BENCHMARK(BM_EnumerateCarmichael)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_QHarmonic(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_harmonic_mod(p, 1, false, 2));
}
BENCHMARK(BM_QHarmonic)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);
