#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "egal/deception.hpp"
#include "egal/format.hpp"

namespace egal {

PreferenceVector renormalize_limited(std::span<const double> values, double r,
                                     std::span<const bool> fixed)
{
  const std::size_t m = values.size();
  if (fixed.size() != m)
  {
    throw DimensionError("fixed mask has " + std::to_string(fixed.size()) + " entries for " +
                         std::to_string(m) + " values");
  }
  if (m == 0)
  {
    throw RenormalizationError("cannot renormalize an empty vector");
  }

  double sum = 0.0;
  bool in_range = true;
  for (double v : values)
  {
    sum += v;
    in_range = in_range && v >= kLowerBound && v <= kUpperBound;
  }
  if (in_range && std::abs(sum - r) <= kStrictSumTolerance)
  {
    return PreferenceVector{std::vector<double>(values.begin(), values.end())};
  }

  std::vector<double> v(values.begin(), values.end());
  std::vector<char> locked(m);
  for (std::size_t j = 0; j < m; ++j)
  {
    v[j] = std::clamp(v[j], kLowerBound, kUpperBound);
    locked[j] = fixed[j] ? 1 : 0;
  }

  for (std::size_t round = 0; round <= m; ++round)
  {
    double locked_sum = 0.0;
    double free_sum = 0.0;
    std::size_t free_count = 0;
    for (std::size_t j = 0; j < m; ++j)
    {
      if (locked[j])
      {
        locked_sum += v[j];
      }
      else
      {
        free_sum += v[j];
        ++free_count;
      }
    }
    if (free_count == 0)
    {
      break;
    }
    const double target = r - locked_sum;
    const double slack = kStrictSumTolerance;
    if (target < static_cast<double>(free_count) * kLowerBound - slack ||
        target > static_cast<double>(free_count) * kUpperBound + slack)
    {
      throw RenormalizationError("free coordinates must absorb " + format_exact(target) +
                                 " over " + std::to_string(free_count) +
                                 " values, outside the feasible range");
    }
    const double scale = target / free_sum;
    bool clamped = false;
    for (std::size_t j = 0; j < m; ++j)
    {
      if (locked[j])
      {
        continue;
      }
      const double scaled = v[j] * scale;
      if (scaled < kLowerBound)
      {
        v[j] = kLowerBound;
        locked[j] = 1;
        clamped = true;
      }
      else if (scaled > kUpperBound)
      {
        v[j] = kUpperBound;
        locked[j] = 1;
        clamped = true;
      }
      else
      {
        v[j] = scaled;
      }
    }
    if (!clamped)
    {
      break;
    }
  }

  // Push the last rounding residue onto the free coordinate with the most room.
  double total = 0.0;
  for (double x : v)
  {
    total += x;
  }
  double residual = r - total;
  if (residual != 0.0)
  {
    std::size_t pick = m;
    double room = -1.0;
    for (std::size_t j = 0; j < m; ++j)
    {
      if (fixed[j])
      {
        continue;
      }
      const double avail = residual > 0 ? kUpperBound - v[j] : v[j] - kLowerBound;
      if (avail > room)
      {
        room = avail;
        pick = j;
      }
    }
    if (pick < m && room >= std::abs(residual))
    {
      v[pick] += residual;
    }
  }

  total = 0.0;
  for (double x : v)
  {
    total += x;
  }
  if (!(std::abs(total - r) <= kStrictSumTolerance))
  {
    throw RenormalizationError("cannot reach sum " + format_exact(r) + " (got " +
                               format_exact(total) + ") with the given fixed coordinates");
  }
  return PreferenceVector{std::move(v)};
}

PreferenceVector renormalize_limited(std::span<const double> values, double r)
{
  std::unique_ptr<bool[]> mask(new bool[values.size()]());
  return renormalize_limited(values, r, std::span<const bool>(mask.get(), values.size()));
}

}  // namespace egal
