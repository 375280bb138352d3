#include <algorithm>
#include <cmath>

#include "egal/deception.hpp"

namespace egal {

namespace {

std::vector<double> restore_mode(std::vector<double> v, const Scenario& scenario)
{
  for (auto& x : v)
  {
    x = std::clamp(x, kLowerBound, kUpperBound);
  }
  if (!scenario.is_limited())
  {
    return v;
  }
  auto p = renormalize_limited(v, scenario.r);
  return {p.values().begin(), p.values().end()};
}

GenomeSpec<std::vector<double>> lie_genome(std::size_t m, const Scenario& scenario,
                                           double mutation_sd)
{
  GenomeSpec<std::vector<double>> spec;
  spec.length = m;
  // Log-uniform over the valid range.
  spec.random = [m, scenario](Rng& rng) {
    static const double lo = std::log(kLowerBound);
    static const double hi = std::log(kUpperBound);
    std::vector<double> v(m);
    for (auto& x : v)
    {
      x = std::exp(rng.uniform(lo, hi));
    }
    return restore_mode(std::move(v), scenario);
  };
  // Arithmetic blend with one weight per child.
  spec.crossover = [scenario](const std::vector<double>& a, const std::vector<double>& b,
                              Rng& rng) {
    const double w = rng.uniform01();
    std::vector<double> child(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
    {
      child[j] = w * a[j] + (1.0 - w) * b[j];
    }
    return restore_mode(std::move(child), scenario);
  };
  spec.mutate = [scenario, mutation_sd](std::vector<double>& g, double rate, Rng& rng) {
    bool touched = false;
    for (auto& x : g)
    {
      if (rng.bernoulli(rate))
      {
        x += mutation_sd * rng.normal();
        touched = true;
      }
    }
    if (touched)
    {
      g = restore_mode(std::move(g), scenario);
    }
  };
  return spec;
}

}  // namespace

UlgaResult optimal_lie_ulga(const ProblemInstance& inst, const UlgaConfig& cfg,
                            const SolverSpec& inner)
{
  validate(cfg.ga);
  if (!(cfg.mutation_sd >= 0.0))
  {
    throw ConfigError("mutation_sd must be non-negative");
  }
  if (auto violations = validate_instance(inst); !violations.empty())
  {
    throw ValidationError(std::move(violations));
  }
  const auto& scenario = inst.profile.scenario();
  const std::size_t m = inst.profile.resources();

  auto fitness = [&](const std::vector<double>& candidate) {
    const auto alloc =
        solve_allocation(inst.reported_profile(PreferenceVector{candidate}), inner);
    return agent_utility(alloc, inst.truth, inst.liar);
  };
  auto run = evolve(fitness, lie_genome(m, scenario, cfg.mutation_sd), cfg.ga);

  UlgaResult out;
  out.lie = LieVector{PreferenceVector{std::move(run.best)}};
  out.evaluation = evaluate_lie(inst, out.lie, inner);
  out.history = std::move(run.history);
  out.evaluations = run.evaluations;
  return out;
}

}  // namespace egal
