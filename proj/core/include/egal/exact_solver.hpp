#pragma once

#include <cstdint>
#include <optional>

#include "egal/model.hpp"

namespace egal {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

struct ExactOptions
{
  /// Largest n^m the solver agrees to enumerate.
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Also count how many allocations reach the optimum.
  bool count_optimal = false;
  /// Worker threads; the result is identical for every value.
  unsigned threads = 1;
};

struct ExactSolution
{
  Allocation best;
  Welfare welfare;
  std::optional<std::uint64_t> optimal_set_size;
};

/// n^m, saturating at UINT64_MAX.
std::uint64_t enumeration_size(std::size_t agents, std::size_t resources);

/// Exhaustive egalitarian optimum over all n^m owner sequences.
///
/// Sequences are visited in lexicographic order (resource 0 most
/// significant) and only a strictly better welfare replaces the incumbent,
/// so among optimal allocations the lexicographically smallest owner
/// sequence is returned. Utilities are accumulated resource by resource in
/// index order, which makes the reported welfare bit-identical to
/// `egalitarian_welfare(best, profile)`.
///
/// Throws BudgetError when n^m exceeds `options.budget`.
ExactSolution solve_exact(const PreferenceProfile& profile, const ExactOptions& options = {});

/// True iff some allocation gives every agent strictly positive utility.
bool exists_positive_allocation(const PreferenceProfile& profile);

}  // namespace egal
