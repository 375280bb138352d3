#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "egal/deception.hpp"
#include "egal/model.hpp"
#include "egal/rng.hpp"
#include "egal/solver.hpp"

namespace egal {

struct RobustnessConfig
{
  /// Noise standard deviations in utility points, ascending.
  std::vector<double> sigmas;
  std::size_t replicates = 1000;
  std::uint64_t seed = 0;
  SolverSpec solver = ExactSolver{};
  /// Replicate k of sigma s draws from Rng::stream(seed, {s, first_replicate + k});
  /// lets a long run be split into pieces that concatenate exactly.
  std::size_t first_replicate = 0;
  unsigned threads = 1;
};

void validate(const RobustnessConfig& cfg);

/// Each rival value resampled from Normal(value, sigma) and clamped to the
/// valid range; in limited mode each row is then rescaled to sum r. With
/// sigma == 0 the rows come back untouched.
std::vector<PreferenceVector> perturb_profile(std::span<const PreferenceVector> rivals,
                                              double sigma, Rng& rng, const Scenario& scenario);

struct RobustnessSample
{
  std::size_t sigma_index = 0;
  double sigma = 0.0;
  std::size_t replicate = 0;
  double truthful_utility = 0.0;
  double lying_utility = 0.0;

  double profit() const
  {
    return lying_utility - truthful_utility;
  }
};

struct RobustnessPoint
{
  double sigma = 0.0;
  std::size_t replicates = 0;
  double mean_truthful_utility = 0.0;
  double mean_lying_utility = 0.0;
  double mean_profit = 0.0;
  /// Sample standard deviation (n - 1); 0 for a single replicate.
  double sd_profit = 0.0;
};

struct RobustnessCurve
{
  std::vector<RobustnessPoint> points;
};

/// One record per (sigma, replicate), sigma-major. The lie is held fixed;
/// only the rivals are perturbed.
std::vector<RobustnessSample> robustness_samples(const ProblemInstance& inst,
                                                 const LieVector& lie,
                                                 const RobustnessConfig& cfg);

/// Aggregates samples per sigma, in the order of `sigmas`.
RobustnessCurve summarize(std::span<const RobustnessSample> samples,
                          std::span<const double> sigmas);

RobustnessCurve robustness_experiment(const ProblemInstance& inst, const LieVector& lie,
                                      const RobustnessConfig& cfg);

}  // namespace egal
