#pragma once

// Reference enumerator written independently of egal::solve_exact: plain
// recursion, utilities recomputed from scratch at every leaf.

#include <functional>
#include <limits>
#include <vector>

#include "egal/model.hpp"

namespace egal::testing {

struct OracleResult
{
  std::vector<AgentIndex> best;
  double welfare = -std::numeric_limits<double>::infinity();
  std::size_t ties = 0;
};

inline double leaf_welfare(const std::vector<AgentIndex>& owner,
                           const std::vector<std::vector<double>>& rows)
{
  double w = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i)
  {
    double u = 0.0;
    for (std::size_t j = 0; j < owner.size(); ++j)
    {
      if (owner[j] == i)
      {
        u += rows[i][j];
      }
    }
    w = u < w ? u : w;
  }
  return w;
}

/// Visits every owner sequence in lexicographic order.
inline void for_each_allocation(std::size_t n, std::size_t m,
                                const std::function<void(const std::vector<AgentIndex>&)>& visit)
{
  std::vector<AgentIndex> owner(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == m)
    {
      visit(owner);
      return;
    }
    for (std::size_t a = 0; a < n; ++a)
    {
      owner[j] = a;
      rec(j + 1);
    }
  };
  rec(0);
}

inline OracleResult oracle_solve(const PreferenceProfile& profile)
{
  std::vector<std::vector<double>> rows;
  for (const auto& r : profile.rows())
  {
    rows.emplace_back(r.values().begin(), r.values().end());
  }
  OracleResult out;
  for_each_allocation(profile.agents(), profile.resources(), [&](const auto& owner) {
    const double w = leaf_welfare(owner, rows);
    if (w > out.welfare)
    {
      out.welfare = w;
      out.best = owner;
      out.ties = 1;
    }
    else if (w == out.welfare)
    {
      ++out.ties;
    }
  });
  return out;
}

/// Largest true utility of `agent` over allocations giving every other
/// agent at least one resource it values positively.
inline double oracle_best_positive_for_rivals(const PreferenceProfile& profile, AgentIndex agent,
                                              const PreferenceVector& truth)
{
  double best = -1.0;
  for_each_allocation(profile.agents(), profile.resources(), [&](const auto& owner) {
    for (std::size_t k = 0; k < profile.agents(); ++k)
    {
      if (k == agent)
      {
        continue;
      }
      double u = 0.0;
      for (std::size_t j = 0; j < owner.size(); ++j)
      {
        if (owner[j] == k)
        {
          u += profile.row(k)[j];
        }
      }
      if (!(u > 0.0))
      {
        return;
      }
    }
    double mine = 0.0;
    for (std::size_t j = 0; j < owner.size(); ++j)
    {
      if (owner[j] == agent)
      {
        mine += truth[j];
      }
    }
    best = mine > best ? mine : best;
  });
  return best;
}

}  // namespace egal::testing
