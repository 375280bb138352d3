#include "egal/llga.hpp"

#include <algorithm>
#include <limits>

namespace egal {

GenomeSpec<std::vector<AgentIndex>> allocation_genome(std::size_t agents, std::size_t resources)
{
  GenomeSpec<std::vector<AgentIndex>> spec;
  spec.length = resources;
  spec.random = [agents, resources](Rng& rng) {
    std::vector<AgentIndex> owner(resources);
    for (auto& o : owner)
    {
      o = static_cast<AgentIndex>(rng.below(agents));
    }
    return owner;
  };
  spec.crossover = [](const std::vector<AgentIndex>& a, const std::vector<AgentIndex>& b,
                      Rng& rng) {
    std::vector<AgentIndex> child(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
    {
      child[j] = rng.bernoulli(0.5) ? a[j] : b[j];
    }
    return child;
  };
  spec.mutate = [agents](std::vector<AgentIndex>& g, double rate, Rng& rng) {
    for (auto& o : g)
    {
      if (rng.bernoulli(rate))
      {
        o = static_cast<AgentIndex>(rng.below(agents));
      }
    }
  };
  return spec;
}

GARun solve_llga(const PreferenceProfile& profile, const GAConfig& cfg)
{
  validate(cfg);
  const std::size_t n = profile.agents();
  const std::size_t m = profile.resources();
  if (n == 0)
  {
    throw DimensionError("profile has no agents");
  }
  for (const auto& row : profile.rows())
  {
    if (row.size() != m)
    {
      throw DimensionError("profile rows have unequal lengths");
    }
  }

  // Accumulate in resource order so the value matches egalitarian_welfare exactly.
  auto fitness = [&profile, n, m](const std::vector<AgentIndex>& owner) {
    double util[64];
    std::vector<double> heap;
    double* u = util;
    if (n > 64)
    {
      heap.assign(n, 0.0);
      u = heap.data();
    }
    else
    {
      std::fill(util, util + n, 0.0);
    }
    for (std::size_t j = 0; j < m; ++j)
    {
      u[owner[j]] += profile.row(owner[j])[j];
    }
    return *std::min_element(u, u + n);
  };

  auto run = evolve(fitness, allocation_genome(n, m), cfg);
  return GARun{Allocation{std::move(run.best)}, Welfare{run.fitness}, std::move(run.history)};
}

}  // namespace egal
