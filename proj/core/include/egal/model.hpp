#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egal/error.hpp"

namespace egal {

using AgentIndex = std::size_t;
using ResourceIndex = std::size_t;

/// Valuations must lie in [kEpsilon, kMaxValue - kEpsilon]; this is the
/// closed stand-in for the open interval (0, 100).
inline constexpr double kEpsilon = 1e-6;
inline constexpr double kMaxValue = 100.0;
inline constexpr double kLowerBound = kEpsilon;
inline constexpr double kUpperBound = kMaxValue - kEpsilon;

/// Absolute tolerance on row sums in limited mode.
inline constexpr double kStrictSumTolerance = 1e-9;
/// Tolerance that admits the two- and three-decimal reference tables.
inline constexpr double kTableSumTolerance = 0.06;

inline constexpr double kDefaultBudgetSum = 100.0;

/// Unlimited: every value in range. Limited: additionally every row sums to r.
struct Scenario
{
  enum class Kind
  {
    Unlimited,
    Limited,
  };

  Kind kind = Kind::Unlimited;
  double r = kDefaultBudgetSum;
  double sum_tolerance = kStrictSumTolerance;

  static Scenario unlimited()
  {
    return {};
  }
  static Scenario limited(double r = kDefaultBudgetSum, double tolerance = kStrictSumTolerance)
  {
    return {Kind::Limited, r, tolerance};
  }

  bool is_limited() const
  {
    return kind == Kind::Limited;
  }

  bool operator==(const Scenario&) const = default;
};

std::string to_string(Scenario::Kind kind);

/// One agent's additive valuation of each resource.
class PreferenceVector
{
public:
  PreferenceVector() = default;
  explicit PreferenceVector(std::vector<double> values)
    : values_(std::move(values))
  {}
  PreferenceVector(std::initializer_list<double> values)
    : values_(values)
  {}

  std::size_t size() const
  {
    return values_.size();
  }
  double operator[](ResourceIndex j) const
  {
    return values_[j];
  }
  std::span<const double> values() const
  {
    return values_;
  }
  double sum() const;

  bool operator==(const PreferenceVector&) const = default;

private:
  std::vector<double> values_;
};

/// Row i holds agent i's reported (or true) valuations.
class PreferenceProfile
{
public:
  PreferenceProfile() = default;
  PreferenceProfile(std::vector<PreferenceVector> rows, Scenario scenario = Scenario::unlimited());

  std::size_t agents() const
  {
    return rows_.size();
  }
  /// Length of the first row; rows of other lengths are a validation issue.
  std::size_t resources() const
  {
    return rows_.empty() ? 0 : rows_.front().size();
  }
  const PreferenceVector& row(AgentIndex i) const
  {
    return rows_.at(i);
  }
  const std::vector<PreferenceVector>& rows() const
  {
    return rows_;
  }
  const Scenario& scenario() const
  {
    return scenario_;
  }

  /// Copy of this profile with agent i's row replaced.
  PreferenceProfile with_row(AgentIndex i, PreferenceVector row) const;
  /// All rows except agent i's, in order.
  std::vector<PreferenceVector> rows_except(AgentIndex i) const;

  bool operator==(const PreferenceProfile&) const = default;

private:
  std::vector<PreferenceVector> rows_;
  Scenario scenario_;
};

/// owner[j] is the agent receiving resource j.
class Allocation
{
public:
  Allocation() = default;
  explicit Allocation(std::vector<AgentIndex> owner)
    : owner_(std::move(owner))
  {}
  Allocation(std::initializer_list<AgentIndex> owner)
    : owner_(owner)
  {}

  std::size_t size() const
  {
    return owner_.size();
  }
  AgentIndex operator[](ResourceIndex j) const
  {
    return owner_[j];
  }
  std::span<const AgentIndex> owners() const
  {
    return owner_;
  }
  /// Resources held by `agent`, ascending.
  std::vector<ResourceIndex> bundle(AgentIndex agent) const;

  /// Build from 1-based agent labels as printed in tables and reports.
  static Allocation from_labels(std::span<const std::size_t> labels);

  auto operator<=>(const Allocation&) const = default;

private:
  std::vector<AgentIndex> owner_;
};

struct Welfare
{
  double value = 0.0;
  auto operator<=>(const Welfare&) const = default;
};

/// Reported profile, the designated liar, and the liar's true valuations.
struct ProblemInstance
{
  PreferenceProfile profile;
  AgentIndex liar = 0;
  PreferenceVector truth;

  /// Liar's row replaced by its true valuation.
  PreferenceProfile truthful_profile() const
  {
    return profile.with_row(liar, truth);
  }
  /// Liar's row replaced by `lie`.
  PreferenceProfile reported_profile(const PreferenceVector& lie) const
  {
    return profile.with_row(liar, lie);
  }
  std::vector<PreferenceVector> rivals() const
  {
    return profile.rows_except(liar);
  }

  bool operator==(const ProblemInstance&) const = default;
};

/// Sum of prefs over the resources `alloc` gives to `agent`.
/// Throws DimensionError on length mismatch.
double agent_utility(const Allocation& alloc, const PreferenceVector& prefs, AgentIndex agent);

/// Minimum agent utility over the whole profile.
Welfare egalitarian_welfare(const Allocation& alloc, const PreferenceProfile& profile);

/// Per-agent utilities, in agent order.
std::vector<double> agent_utilities(const Allocation& alloc, const PreferenceProfile& profile);

// Validation ----------------------------------------------------------------

struct Violation
{
  enum class Kind
  {
    AgentCount,
    ResourceCount,
    RowLength,
    Range,
    SumConstraint,
    LiarIndex,
    Scenario,
  };

  Kind kind;
  /// Agent row, when the issue is tied to one; nullopt for the truth row or instance-level issues.
  std::optional<AgentIndex> agent;
  std::optional<ResourceIndex> resource;
  bool truth_row = false;
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Every invariant violation of a single vector under `scenario` (range,
/// length against `expected_length`, and sum in limited mode). Coordinates
/// are left for the caller to fill in.
std::vector<Violation> validate_vector(const PreferenceVector& vec, const Scenario& scenario,
                                       std::size_t expected_length);

std::vector<Violation> validate_profile(const PreferenceProfile& profile);

/// Enumerates every violation; an empty result means the instance is valid.
std::vector<Violation> validate_instance(const ProblemInstance& inst);

/// Renders violations one per line using 1-based agent/resource labels.
std::string describe(const std::vector<Violation>& violations);

class ValidationError : public Error
{
public:
  explicit ValidationError(std::vector<Violation> violations)
    : Error(describe(violations))
    , violations_(std::move(violations))
  {}

  const std::vector<Violation>& violations() const
  {
    return violations_;
  }

private:
  std::vector<Violation> violations_;
};

}  // namespace egal
