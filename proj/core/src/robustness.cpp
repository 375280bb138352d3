#include "egal/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace egal {

void validate(const RobustnessConfig& cfg)
{
  if (cfg.replicates < 1)
  {
    throw ConfigError("replicates must be >= 1");
  }
  if (cfg.sigmas.empty())
  {
    throw ConfigError("at least one sigma is required");
  }
  for (std::size_t s = 0; s < cfg.sigmas.size(); ++s)
  {
    if (!(cfg.sigmas[s] >= 0.0) || !std::isfinite(cfg.sigmas[s]))
    {
      throw ConfigError("sigmas must be finite and non-negative");
    }
    if (s > 0 && cfg.sigmas[s] < cfg.sigmas[s - 1])
    {
      throw ConfigError("sigmas must be ascending");
    }
  }
}

std::vector<PreferenceVector> perturb_profile(std::span<const PreferenceVector> rivals,
                                              double sigma, Rng& rng, const Scenario& scenario)
{
  if (!(sigma >= 0.0))
  {
    throw ConfigError("sigma must be non-negative");
  }
  std::vector<PreferenceVector> out(rivals.begin(), rivals.end());
  if (sigma == 0.0)
  {
    return out;
  }
  for (auto& row : out)
  {
    std::vector<double> v(row.values().begin(), row.values().end());
    for (auto& x : v)
    {
      x = std::clamp(rng.normal(x, sigma), kLowerBound, kUpperBound);
    }
    row = scenario.is_limited() ? renormalize_limited(v, scenario.r)
                                : PreferenceVector{std::move(v)};
  }
  return out;
}

namespace {

PreferenceProfile assemble(const std::vector<PreferenceVector>& rivals, AgentIndex liar,
                           const PreferenceVector& liar_row, const Scenario& scenario)
{
  std::vector<PreferenceVector> rows;
  rows.reserve(rivals.size() + 1);
  for (std::size_t k = 0; k <= rivals.size(); ++k)
  {
    if (k == liar)
    {
      rows.push_back(liar_row);
    }
    if (k < rivals.size())
    {
      rows.push_back(rivals[k]);
    }
  }
  return PreferenceProfile{std::move(rows), scenario};
}

}  // namespace

std::vector<RobustnessSample> robustness_samples(const ProblemInstance& inst,
                                                 const LieVector& lie,
                                                 const RobustnessConfig& cfg)
{
  validate(cfg);
  {
    auto violations = validate_instance(inst);
    for (auto v :
         validate_vector(lie.reported, inst.profile.scenario(), inst.profile.resources()))
    {
      v.message = "lie: " + v.message;
      violations.push_back(std::move(v));
    }
    if (!violations.empty())
    {
      throw ValidationError(std::move(violations));
    }
  }
  const auto rivals = inst.rivals();
  const auto& scenario = inst.profile.scenario();

  std::vector<RobustnessSample> out(cfg.sigmas.size() * cfg.replicates);
  auto run_one = [&](std::size_t slot) {
    const std::size_t s = slot / cfg.replicates;
    const std::size_t k = cfg.first_replicate + slot % cfg.replicates;
    Rng rng = Rng::stream(cfg.seed, {s, k});
    const auto perturbed = perturb_profile(rivals, cfg.sigmas[s], rng, scenario);
    const auto truthful =
        solve_allocation(assemble(perturbed, inst.liar, inst.truth, scenario), cfg.solver);
    const auto lying =
        solve_allocation(assemble(perturbed, inst.liar, lie.reported, scenario), cfg.solver);
    out[slot] = RobustnessSample{s,
                                 cfg.sigmas[s],
                                 k,
                                 agent_utility(truthful, inst.truth, inst.liar),
                                 agent_utility(lying, inst.truth, inst.liar)};
  };

  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1)
  {
    for (std::size_t slot = 0; slot < out.size(); ++slot)
    {
      run_one(slot);
    }
  }
  else
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
    {
      pool.emplace_back([&, w] {
        for (std::size_t slot = w; slot < out.size(); slot += threads)
        {
          run_one(slot);
        }
      });
    }
  }
  return out;
}

namespace {

// Means are taken relative to the first value so that identical inputs
// produce that exact value back.
struct ShiftedMoments
{
  double first = 0.0;
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t count = 0;

  void add(double x)
  {
    if (count == 0)
    {
      first = x;
    }
    const double d = x - first;
    sum += d;
    sum_sq += d * d;
    ++count;
  }
  double mean() const
  {
    return first + sum / static_cast<double>(count);
  }
  double sample_sd() const
  {
    if (count < 2)
    {
      return 0.0;
    }
    const double n = static_cast<double>(count);
    const double var = (sum_sq - sum * sum / n) / (n - 1.0);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

RobustnessCurve summarize(std::span<const RobustnessSample> samples,
                          std::span<const double> sigmas)
{
  std::vector<ShiftedMoments> truthful(sigmas.size()), lying(sigmas.size()),
      profit(sigmas.size());
  for (const auto& s : samples)
  {
    if (s.sigma_index >= sigmas.size())
    {
      throw DimensionError("sample refers to sigma index beyond the grid");
    }
    truthful[s.sigma_index].add(s.truthful_utility);
    lying[s.sigma_index].add(s.lying_utility);
    profit[s.sigma_index].add(s.profit());
  }
  RobustnessCurve curve;
  for (std::size_t s = 0; s < sigmas.size(); ++s)
  {
    RobustnessPoint p;
    p.sigma = sigmas[s];
    p.replicates = profit[s].count;
    if (p.replicates > 0)
    {
      p.mean_truthful_utility = truthful[s].mean();
      p.mean_lying_utility = lying[s].mean();
      p.mean_profit = profit[s].mean();
      p.sd_profit = profit[s].sample_sd();
    }
    curve.points.push_back(p);
  }
  return curve;
}

RobustnessCurve robustness_experiment(const ProblemInstance& inst, const LieVector& lie,
                                      const RobustnessConfig& cfg)
{
  const auto samples = robustness_samples(inst, lie, cfg);
  return summarize(samples, cfg.sigmas);
}

}  // namespace egal
