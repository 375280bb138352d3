#pragma once

#include <string>
#include <variant>

#include "egal/exact_solver.hpp"
#include "egal/ga.hpp"
#include "egal/model.hpp"

namespace egal {

struct ExactSolver
{
  ExactOptions options;
};

struct LlgaSolver
{
  GAConfig config;
};

/// The auctioneer: which egalitarian solver computes allocations.
using SolverSpec = std::variant<ExactSolver, LlgaSolver>;

Allocation solve_allocation(const PreferenceProfile& profile, const SolverSpec& solver);

/// Short stable label, e.g. "exact" or "llga".
std::string solver_name(const SolverSpec& solver);

/// Every parameter of the solver as "key=value" pairs joined by ';'.
std::string solver_description(const SolverSpec& solver);

}  // namespace egal
