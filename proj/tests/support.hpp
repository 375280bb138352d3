#pragma once

#include <vector>

#include "egal/model.hpp"
#include "egal/rng.hpp"

namespace egal::testing {

inline std::vector<PreferenceVector> table1_rows()
{
  return {
      {42.36, 19.18, 75.37, 42.32, 60.20, 68.98, 85.30, 20.66, 31.67, 60.41},
      {53.70, 96.73, 70.87, 68.47, 86.95, 51.34, 3.06, 30.01, 55.03, 45.42},
      {88.49, 17.88, 70.73, 98.71, 30.42, 40.71, 98.41, 85.19, 42.08, 57.05},
      {95.08, 50.57, 69.31, 26.01, 56.03, 64.09, 55.08, 6.62, 49.24, 31.69},
  };
}

inline std::vector<PreferenceVector> table2_rows()
{
  return {
      {17.67, 12.58, 4.35, 12.00, 5.47, 0.77, 14.57, 3.49, 16.55, 12.504},
      {1.927, 6.09, 19.66, 18.17, 10.51, 10.75, 2.42, 3.31, 23.04, 4.07},
      {16.95, 12.24, 11.64, 7.33, 7.63, 12.57, 9.87, 8.73, 11.33, 1.66},
      {14.41, 2.20, 16.78, 1.03, 13.15, 9.70, 5.18, 5.46, 17.19, 14.85},
  };
}

inline const PreferenceVector kTable1Lie{2.21, 2.27, 10.57, 3.12, 6.5, 5.55, 12.09, 2.18, 2.27, 4.87};
inline const PreferenceVector kTable2Lie{13.53, 9.52, 14.35, 9.86, 6.1, 8.83, 9.03, 5.43, 12.2, 11.11};

inline ProblemInstance table1()
{
  auto rows = table1_rows();
  auto truth = rows[0];
  return ProblemInstance{PreferenceProfile{std::move(rows), Scenario::unlimited()}, 0, truth};
}

inline ProblemInstance table2()
{
  auto rows = table2_rows();
  auto truth = rows[0];
  return ProblemInstance{
      PreferenceProfile{std::move(rows), Scenario::limited(100.0, kTableSumTolerance)}, 0, truth};
}

/// i.i.d. Uniform(lo, 100) rows; rescaled to sum r in limited mode.
inline PreferenceVector random_row(Rng& rng, std::size_t m, const Scenario& scenario)
{
  std::vector<double> v(m);
  double sum = 0.0;
  for (auto& x : v)
  {
    x = rng.uniform(1.0, 99.0);
    sum += x;
  }
  if (scenario.is_limited())
  {
    // Keep entries comfortably inside the range so rescaling never clamps.
    for (auto& x : v)
    {
      x *= scenario.r / sum;
    }
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < m; ++j)
    {
      total += v[j];
    }
    v[m - 1] = scenario.r - total;
  }
  return PreferenceVector{std::move(v)};
}

inline PreferenceProfile random_profile(Rng& rng, std::size_t n, std::size_t m,
                                        const Scenario& scenario = Scenario::unlimited())
{
  std::vector<PreferenceVector> rows;
  for (std::size_t i = 0; i < n; ++i)
  {
    rows.push_back(random_row(rng, m, scenario));
  }
  return PreferenceProfile{std::move(rows), scenario};
}

inline ProblemInstance random_instance(Rng& rng, std::size_t n, std::size_t m,
                                       const Scenario& scenario = Scenario::unlimited())
{
  auto profile = random_profile(rng, n, m, scenario);
  auto truth = profile.row(0);
  return ProblemInstance{std::move(profile), 0, std::move(truth)};
}

}  // namespace egal::testing
