#pragma once

#include <vector>

#include "egal/ga.hpp"
#include "egal/model.hpp"

namespace egal {

struct GARun
{
  Allocation best;
  Welfare welfare;
  std::vector<double> history;
};

/// Genome spec for owner sequences over `agents` agents and `resources`
/// resources: uniform random init, uniform crossover, per-gene reassignment
/// to a uniformly random agent.
GenomeSpec<std::vector<AgentIndex>> allocation_genome(std::size_t agents, std::size_t resources);

/// Approximate egalitarian optimum by a GA whose fitness is the egalitarian
/// welfare. Deterministic in (profile, cfg).
GARun solve_llga(const PreferenceProfile& profile, const GAConfig& cfg = {});

}  // namespace egal
