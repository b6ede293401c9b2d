#include <benchmark/benchmark.h>

#include <random>

#include "ncpb/bundles.hpp"
#include "ncpb/cohomology.hpp"

using namespace ncpb;

static void BM_CycloMultiply(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  std::mt19937 rng(5);
  Cyclo a, b;
  for (unsigned long k = 0; k < n; ++k) {
    a += Cyclo(static_cast<long long>(rng() % 7) - 3) * Cyclo::zeta(n, static_cast<long long>(k));
    b += Cyclo(static_cast<long long>(rng() % 7) - 3) * Cyclo::zeta(n, static_cast<long long>(k));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply)->Arg(4)->Arg(12)->Arg(60);

static void BM_VerifyClockShift(benchmark::State& state) {
  ClockShift cs = clock_shift_system(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_algebra(cs.system.algebra));
}
BENCHMARK(BM_VerifyClockShift)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_H2BruteForce(benchmark::State& state) {
  FinAbGroup g({state.range(0)});
  CoeffModule m = CoeffModule::mu(state.range(1), g);
  for (auto _ : state) benchmark::DoNotOptimize(h2_bruteforce(m));
}
BENCHMARK(BM_H2BruteForce)->Args({2, 4})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
