#include <benchmark/benchmark.h>

#include "egal/egal.hpp"

namespace {

using namespace egal;

PreferenceProfile random_profile(std::size_t n, std::size_t m, std::uint64_t seed)
{
  Rng rng(seed);
  std::vector<PreferenceVector> rows;
  for (std::size_t i = 0; i < n; ++i)
  {
    std::vector<double> v(m);
    for (auto& x : v)
    {
      x = rng.uniform(kLowerBound, kUpperBound);
    }
    rows.emplace_back(std::move(v));
  }
  return PreferenceProfile{std::move(rows)};
}

void BM_SolveExact(benchmark::State& state)
{
  const auto profile = random_profile(state.range(0), state.range(1), 1);
  ExactOptions opts;
  opts.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(solve_exact(profile, opts).welfare);
  }
  state.counters["leaves"] = benchmark::Counter(
      static_cast<double>(enumeration_size(profile.agents(), profile.resources())),
      benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_SolveExact)
    ->Args({3, 8, 1})
    ->Args({4, 8, 1})
    ->Args({4, 10, 1})
    ->Args({4, 10, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_SolveLlga(benchmark::State& state)
{
  const auto profile = random_profile(state.range(0), state.range(1), 2);
  GAConfig cfg;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(solve_llga(profile, cfg).welfare);
    ++cfg.seed;
  }
}
BENCHMARK(BM_SolveLlga)->Args({4, 10})->Args({8, 40})->Unit(benchmark::kMillisecond);

void BM_LieProfit(benchmark::State& state)
{
  const auto profile = random_profile(4, 10, 3);
  const ProblemInstance inst{profile, 0, profile.row(0)};
  const auto lie = optimal_lie_unlimited(inst.truth, inst.rivals());
  const SolverSpec solver = ExactSolver{};
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(lie_profit(inst, lie, solver));
  }
}
BENCHMARK(BM_LieProfit)->Unit(benchmark::kMillisecond);

void BM_RenormalizeLimited(benchmark::State& state)
{
  Rng rng(4);
  std::vector<double> v(static_cast<std::size_t>(state.range(0)));
  for (auto& x : v)
  {
    x = rng.uniform(kLowerBound, kUpperBound);
  }
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(renormalize_limited(v, 100.0));
  }
}
BENCHMARK(BM_RenormalizeLimited)->Arg(10)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
