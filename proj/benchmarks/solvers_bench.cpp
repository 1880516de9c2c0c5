#include <benchmark/benchmark.h>

#include <random>

#include "chorediv/chorediv.hpp"

using namespace chorediv;

namespace {

// n agents with values in [-100, -1], m/2 chores of each type.
Instance random_instance(std::size_t n, Count items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> value(1, 100);
  Instance instance;
  for (std::size_t i = 0; i < n; ++i) {
    instance.agents.push_back({-value(rng), -value(rng)});
  }
  instance.countA = items / 2;
  instance.countB = items - items / 2;
  return instance;
}

void BM_Ef1Fpo(benchmark::State& state) {
  const Instance instance = random_instance(
      static_cast<std::size_t>(state.range(0)), state.range(1), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_ef1_fpo(instance));
}
BENCHMARK(BM_Ef1Fpo)->ArgsProduct({{4, 16, 64}, {64, 512}});

void BM_Efx(benchmark::State& state) {
  // Seeds that reach the constructive path rather than the search fallback.
  Instance instance;
  for (std::uint64_t seed = 1;; ++seed) {
    instance = random_instance(static_cast<std::size_t>(state.range(0)),
                               state.range(1), seed);
    try {
      if (solve_efx_traced(instance, EfxOptions{0}).trace.path !=
          EfxTrace::Path::OracleFallback) {
        break;
      }
    } catch (const BudgetExceeded&) {
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_efx(instance));
}
BENCHMARK(BM_Efx)->ArgsProduct({{4, 16, 64}, {64, 512}});

void BM_EfExists(benchmark::State& state) {
  const Instance instance = random_instance(
      static_cast<std::size_t>(state.range(0)), state.range(1), 11);
  for (auto _ : state) {
    const auto r = ef_search(instance);
    state.counters["states"] = static_cast<double>(r.states);
  }
}
BENCHMARK(BM_EfExists)->ArgsProduct({{3, 6, 12}, {8, 16, 32}});

void BM_OraclePo(benchmark::State& state) {
  const Instance instance = random_instance(
      static_cast<std::size_t>(state.range(0)), state.range(1), 13);
  const CanonicalInstance ci = canonicalize(instance);
  const Allocation X = to_canonical(ci, solve_ef1_fpo(instance));
  for (auto _ : state) benchmark::DoNotOptimize(is_po_integral(ci, X));
}
BENCHMARK(BM_OraclePo)->ArgsProduct({{3, 4}, {6, 10}});

}  // namespace
BENCHMARK_MAIN();
