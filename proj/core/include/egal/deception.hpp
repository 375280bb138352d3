#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "egal/ga.hpp"
#include "egal/model.hpp"
#include "egal/solver.hpp"

namespace egal {

/// A preference vector sent to the auctioneer in place of the liar's truth.
struct LieVector
{
  PreferenceVector reported;

  bool operator==(const LieVector&) const = default;
};

// Predefined strategies ------------------------------------------------------

enum class Direction
{
  Decrease,
  Increase,
};

enum class Target
{
  RandomResources,
  MostValuedByOthers,
  LeastValuedByOthers,
  MostValuedBySelf,
  LeastValuedBySelf,
};

inline constexpr std::size_t kDefaultTopK = 3;
inline constexpr int kMaxLevel = 100;
inline constexpr int kStrategyCount = 10;

struct Strategy
{
  int id = 1;
  Direction direction = Direction::Decrease;
  Target target = Target::RandomResources;
  std::size_t top_k = kDefaultTopK;

  /// Test numbering 1..10; throws ConfigError otherwise.
  static Strategy from_id(int id, std::size_t top_k = kDefaultTopK);
  static std::vector<Strategy> all(std::size_t top_k = kDefaultTopK);

  std::string description() const;
};

/// Resources a strategy modifies, in ranking order. Rankings by others use
/// the column sums of `others`; ties go to the lower index. Random targets
/// are drawn from Rng::stream(seed, {id}), so every level of one sweep hits
/// the same set.
std::vector<ResourceIndex> strategy_targets(const PreferenceVector& truth,
                                            std::span<const PreferenceVector> others,
                                            const Strategy& strategy, std::uint64_t seed = 0);

/// Scales each targeted value by (1 -/+ level/100), clamps to the valid
/// range, and in limited mode rebalances the untargeted values so the row
/// sums to r again. If the targets alone leave no room for that, all
/// coordinates are rescaled together.
LieVector apply_strategy(const PreferenceVector& truth, std::span<const PreferenceVector> others,
                         const Strategy& strategy, int level, const Scenario& scenario,
                         std::uint64_t seed = 0);

/// Rescales the coordinates not marked in `fixed` proportionally so that
/// the vector sums to r, clamping into [kLowerBound, kUpperBound] and
/// redistributing what clamping removes. A vector already summing to r
/// (within kStrictSumTolerance) and in range is returned unchanged.
/// Throws RenormalizationError when no such rescaling exists.
PreferenceVector renormalize_limited(std::span<const double> values, double r,
                                     std::span<const bool> fixed);
PreferenceVector renormalize_limited(std::span<const double> values, double r);

// Profit accounting ----------------------------------------------------------

struct LieEvaluation
{
  Allocation truth_allocation;
  Allocation lie_allocation;
  double truthful_utility = 0.0;
  double lying_utility = 0.0;

  double profit() const
  {
    return lying_utility - truthful_utility;
  }
};

/// Both allocations and the liar's true utility under each. Throws
/// ValidationError if the instance or the lie breaks the scenario rules.
LieEvaluation evaluate_lie(const ProblemInstance& inst, const LieVector& lie,
                           const SolverSpec& solver);

/// u_true(allocation for lie) - u_true(allocation for truth).
double lie_profit(const ProblemInstance& inst, const LieVector& lie, const SolverSpec& solver);

// Optimal lies ---------------------------------------------------------------

/// Scale factor c = 0.5 * (smallest positive rival value) / sum(truth).
double proportional_lie_factor(const PreferenceVector& truth,
                               std::span<const PreferenceVector> others);

/// c * truth, floored at kLowerBound. With additive unlimited preferences
/// this makes the liar's whole reported total smaller than any single
/// positive rival valuation, so the egalitarian optimum maximises the
/// liar's own valuation subject to every rival receiving something.
LieVector optimal_lie_unlimited(const PreferenceVector& truth,
                                std::span<const PreferenceVector> others);

struct SweepOptions
{
  std::vector<int> strategies = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  int levels = kMaxLevel;
  std::size_t top_k = kDefaultTopK;
  std::uint64_t seed = 0;
};

struct SweepPoint
{
  int strategy = 0;
  int level = 0;
  double lying_utility = 0.0;
  double profit = 0.0;
};

struct SweepResult
{
  double truthful_utility = 0.0;
  Allocation truth_allocation;
  /// Strategy-major, levels ascending from 1.
  std::vector<SweepPoint> points;

  /// Level 0 is truth-telling and always yields 0.
  double profit(int strategy, int level) const;
  double mean_profit(int strategy) const;
};

SweepResult strategy_sweep(const ProblemInstance& inst, const SweepOptions& options,
                           const SolverSpec& solver);

// Bilevel lie search ---------------------------------------------------------

struct UlgaConfig
{
  GAConfig ga = default_ga();
  /// Standard deviation of the Gaussian per-gene mutation, utility points.
  double mutation_sd = 5.0;

  static GAConfig default_ga()
  {
    GAConfig c;
    c.generations = 300;
    return c;
  }
  /// 50 individuals evolved 3,000 times.
  static UlgaConfig long_run()
  {
    UlgaConfig c;
    c.ga.generations = 3000;
    return c;
  }
};

struct UlgaResult
{
  LieVector lie;
  LieEvaluation evaluation;
  std::vector<double> history;
  std::size_t evaluations = 0;

  double profit() const
  {
    return evaluation.profit();
  }
};

/// Upper-level GA over lies, started from log-uniform vectors. Fitness of a candidate is the liar's true
/// utility under the inner solver's allocation for that candidate; the
/// returned profit is measured against the fixed truthful allocation.
UlgaResult optimal_lie_ulga(const ProblemInstance& inst, const UlgaConfig& cfg,
                            const SolverSpec& inner);

}  // namespace egal
