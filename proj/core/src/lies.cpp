#include <algorithm>
#include <cmath>
#include <limits>

#include "egal/deception.hpp"

namespace egal {

namespace {

void require_valid(const ProblemInstance& inst, const LieVector& lie)
{
  auto violations = validate_instance(inst);
  for (auto v : validate_vector(lie.reported, inst.profile.scenario(), inst.profile.resources()))
  {
    v.message = "lie: " + v.message;
    violations.push_back(std::move(v));
  }
  if (!violations.empty())
  {
    throw ValidationError(std::move(violations));
  }
}

}  // namespace

LieEvaluation evaluate_lie(const ProblemInstance& inst, const LieVector& lie,
                           const SolverSpec& solver)
{
  require_valid(inst, lie);
  LieEvaluation out;
  out.truth_allocation = solve_allocation(inst.truthful_profile(), solver);
  out.lie_allocation = solve_allocation(inst.reported_profile(lie.reported), solver);
  out.truthful_utility = agent_utility(out.truth_allocation, inst.truth, inst.liar);
  out.lying_utility = agent_utility(out.lie_allocation, inst.truth, inst.liar);
  return out;
}

double lie_profit(const ProblemInstance& inst, const LieVector& lie, const SolverSpec& solver)
{
  return evaluate_lie(inst, lie, solver).profit();
}

double proportional_lie_factor(const PreferenceVector& truth,
                               std::span<const PreferenceVector> others)
{
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& row : others)
  {
    for (double v : row.values())
    {
      if (v > 0.0)
      {
        smallest = std::min(smallest, v);
      }
    }
  }
  const double total = truth.sum();
  if (!std::isfinite(smallest) || !(total > 0.0))
  {
    throw ConfigError("proportional lie needs a positive rival value and a positive truth total");
  }
  return 0.5 * smallest / total;
}

LieVector optimal_lie_unlimited(const PreferenceVector& truth,
                                std::span<const PreferenceVector> others)
{
  const double c = proportional_lie_factor(truth, others);
  std::vector<double> v;
  v.reserve(truth.size());
  for (double x : truth.values())
  {
    v.push_back(std::max(c * x, kLowerBound));
  }
  return LieVector{PreferenceVector{std::move(v)}};
}

}  // namespace egal
