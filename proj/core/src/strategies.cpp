#include <algorithm>
#include <memory>
#include <numeric>

#include "egal/deception.hpp"
#include "egal/rng.hpp"

namespace egal {

Strategy Strategy::from_id(int id, std::size_t top_k)
{
  using D = Direction;
  using T = Target;
  struct Row
  {
    D direction;
    T target;
  };
  static constexpr Row table[kStrategyCount] = {
      {D::Decrease, T::RandomResources},     {D::Increase, T::RandomResources},
      {D::Increase, T::MostValuedByOthers},  {D::Increase, T::LeastValuedByOthers},
      {D::Increase, T::MostValuedBySelf},    {D::Increase, T::LeastValuedBySelf},
      {D::Decrease, T::MostValuedByOthers},  {D::Decrease, T::LeastValuedByOthers},
      {D::Decrease, T::MostValuedBySelf},    {D::Decrease, T::LeastValuedBySelf},
  };
  if (id < 1 || id > kStrategyCount)
  {
    throw ConfigError("strategy id must be in 1..10, got " + std::to_string(id));
  }
  const auto& row = table[id - 1];
  return Strategy{id, row.direction, row.target, top_k};
}

std::vector<Strategy> Strategy::all(std::size_t top_k)
{
  std::vector<Strategy> out;
  for (int id = 1; id <= kStrategyCount; ++id)
  {
    out.push_back(from_id(id, top_k));
  }
  return out;
}

std::string Strategy::description() const
{
  std::string out = direction == Direction::Decrease ? "decrease " : "increase ";
  switch (target)
  {
  case Target::RandomResources:
    return out + "random resources";
  case Target::MostValuedByOthers:
    return out + "resources most valued by others";
  case Target::LeastValuedByOthers:
    return out + "resources least valued by others";
  case Target::MostValuedBySelf:
    return out + "resources most valued by self";
  case Target::LeastValuedBySelf:
    return out + "resources least valued by self";
  }
  return out;
}

std::vector<ResourceIndex> strategy_targets(const PreferenceVector& truth,
                                            std::span<const PreferenceVector> others,
                                            const Strategy& strategy, std::uint64_t seed)
{
  const std::size_t m = truth.size();
  const std::size_t k = std::min(strategy.top_k, m);
  std::vector<ResourceIndex> idx(m);
  std::iota(idx.begin(), idx.end(), ResourceIndex{0});

  if (strategy.target == Target::RandomResources)
  {
    Rng rng = Rng::stream(seed, {static_cast<std::uint64_t>(strategy.id)});
    for (std::size_t t = 0; t < k; ++t)
    {
      const auto pick = t + static_cast<std::size_t>(rng.below(m - t));
      std::swap(idx[t], idx[pick]);
    }
    idx.resize(k);
    return idx;
  }

  std::vector<double> score(m, 0.0);
  const bool by_self =
      strategy.target == Target::MostValuedBySelf || strategy.target == Target::LeastValuedBySelf;
  if (by_self)
  {
    for (std::size_t j = 0; j < m; ++j)
    {
      score[j] = truth[j];
    }
  }
  else
  {
    for (const auto& row : others)
    {
      if (row.size() != m)
      {
        throw DimensionError("rival row length differs from the liar's");
      }
      for (std::size_t j = 0; j < m; ++j)
      {
        score[j] += row[j];
      }
    }
  }
  const bool most =
      strategy.target == Target::MostValuedBySelf || strategy.target == Target::MostValuedByOthers;
  std::stable_sort(idx.begin(), idx.end(), [&](ResourceIndex a, ResourceIndex b) {
    return most ? score[a] > score[b] : score[a] < score[b];
  });
  idx.resize(k);
  return idx;
}

LieVector apply_strategy(const PreferenceVector& truth, std::span<const PreferenceVector> others,
                         const Strategy& strategy, int level, const Scenario& scenario,
                         std::uint64_t seed)
{
  if (level < 1 || level > kMaxLevel)
  {
    throw ConfigError("lying level must be in 1..100, got " + std::to_string(level));
  }
  const auto targets = strategy_targets(truth, others, strategy, seed);
  const double factor = strategy.direction == Direction::Decrease ? 1.0 - level / 100.0
                                                                  : 1.0 + level / 100.0;
  const std::size_t m = truth.size();
  std::vector<double> v(truth.values().begin(), truth.values().end());
  std::unique_ptr<bool[]> fixed(new bool[m]());
  for (auto j : targets)
  {
    v[j] = std::clamp(v[j] * factor, kLowerBound, kUpperBound);
    fixed[j] = true;
  }
  if (!scenario.is_limited())
  {
    return LieVector{PreferenceVector{std::move(v)}};
  }
  try
  {
    return LieVector{renormalize_limited(v, scenario.r, std::span<const bool>(fixed.get(), m))};
  }
  catch (const RenormalizationError&)
  {
    return LieVector{renormalize_limited(v, scenario.r)};
  }
}

double SweepResult::profit(int strategy, int level) const
{
  if (level == 0)
  {
    return 0.0;
  }
  for (const auto& p : points)
  {
    if (p.strategy == strategy && p.level == level)
    {
      return p.profit;
    }
  }
  throw ConfigError("no sweep point for strategy " + std::to_string(strategy) + " level " +
                    std::to_string(level));
}

double SweepResult::mean_profit(int strategy) const
{
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& p : points)
  {
    if (p.strategy == strategy)
    {
      total += p.profit;
      ++count;
    }
  }
  if (count == 0)
  {
    throw ConfigError("no sweep points for strategy " + std::to_string(strategy));
  }
  return total / static_cast<double>(count);
}

SweepResult strategy_sweep(const ProblemInstance& inst, const SweepOptions& options,
                           const SolverSpec& solver)
{
  if (options.levels < 1 || options.levels > kMaxLevel)
  {
    throw ConfigError("levels must be in 1..100, got " + std::to_string(options.levels));
  }
  if (auto violations = validate_instance(inst); !violations.empty())
  {
    throw ValidationError(std::move(violations));
  }
  const auto rivals = inst.rivals();
  SweepResult out;
  out.truth_allocation = solve_allocation(inst.truthful_profile(), solver);
  out.truthful_utility = agent_utility(out.truth_allocation, inst.truth, inst.liar);

  for (int id : options.strategies)
  {
    const auto strategy = Strategy::from_id(id, options.top_k);
    for (int level = 1; level <= options.levels; ++level)
    {
      const auto lie = apply_strategy(inst.truth, rivals, strategy, level,
                                      inst.profile.scenario(), options.seed);
      const auto alloc = solve_allocation(inst.reported_profile(lie.reported), solver);
      const double u = agent_utility(alloc, inst.truth, inst.liar);
      out.points.push_back({id, level, u, u - out.truthful_utility});
    }
  }
  return out;
}

}  // namespace egal
