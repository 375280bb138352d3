#include "egal/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "egal/format.hpp"

namespace egal {

std::string to_string(Scenario::Kind kind)
{
  return kind == Scenario::Kind::Limited ? "limited" : "unlimited";
}

double PreferenceVector::sum() const
{
  double total = 0.0;
  for (double v : values_)
  {
    total += v;
  }
  return total;
}

PreferenceProfile::PreferenceProfile(std::vector<PreferenceVector> rows, Scenario scenario)
  : rows_(std::move(rows))
  , scenario_(scenario)
{}

PreferenceProfile PreferenceProfile::with_row(AgentIndex i, PreferenceVector row) const
{
  if (i >= rows_.size())
  {
    throw DimensionError("agent index " + std::to_string(i + 1) + " out of range for " +
                         std::to_string(rows_.size()) + " agents");
  }
  auto rows = rows_;
  rows[i] = std::move(row);
  return PreferenceProfile{std::move(rows), scenario_};
}

std::vector<PreferenceVector> PreferenceProfile::rows_except(AgentIndex i) const
{
  std::vector<PreferenceVector> out;
  out.reserve(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k)
  {
    if (k != i)
    {
      out.push_back(rows_[k]);
    }
  }
  return out;
}

std::vector<ResourceIndex> Allocation::bundle(AgentIndex agent) const
{
  std::vector<ResourceIndex> out;
  for (std::size_t j = 0; j < owner_.size(); ++j)
  {
    if (owner_[j] == agent)
    {
      out.push_back(j);
    }
  }
  return out;
}

Allocation Allocation::from_labels(std::span<const std::size_t> labels)
{
  std::vector<AgentIndex> owner;
  owner.reserve(labels.size());
  for (auto label : labels)
  {
    if (label == 0)
    {
      throw DimensionError("agent labels are 1-based; got 0");
    }
    owner.push_back(label - 1);
  }
  return Allocation{std::move(owner)};
}

double agent_utility(const Allocation& alloc, const PreferenceVector& prefs, AgentIndex agent)
{
  if (alloc.size() != prefs.size())
  {
    throw DimensionError("allocation covers " + std::to_string(alloc.size()) +
                         " resources but preference vector has " + std::to_string(prefs.size()));
  }
  double total = 0.0;
  for (std::size_t j = 0; j < alloc.size(); ++j)
  {
    if (alloc[j] == agent)
    {
      total += prefs[j];
    }
  }
  return total;
}

std::vector<double> agent_utilities(const Allocation& alloc, const PreferenceProfile& profile)
{
  std::vector<double> out;
  out.reserve(profile.agents());
  for (std::size_t i = 0; i < profile.agents(); ++i)
  {
    out.push_back(agent_utility(alloc, profile.row(i), i));
  }
  return out;
}

Welfare egalitarian_welfare(const Allocation& alloc, const PreferenceProfile& profile)
{
  if (profile.agents() == 0)
  {
    throw DimensionError("profile has no agents");
  }
  for (std::size_t j = 0; j < alloc.size(); ++j)
  {
    if (alloc[j] >= profile.agents())
    {
      throw DimensionError("resource " + std::to_string(j + 1) + " assigned to agent " +
                           std::to_string(alloc[j] + 1) + " of " +
                           std::to_string(profile.agents()));
    }
  }
  const auto utilities = agent_utilities(alloc, profile);
  return Welfare{*std::min_element(utilities.begin(), utilities.end())};
}

// Validation ----------------------------------------------------------------

std::string to_string(Violation::Kind kind)
{
  switch (kind)
  {
  case Violation::Kind::AgentCount:
    return "agent-count";
  case Violation::Kind::ResourceCount:
    return "resource-count";
  case Violation::Kind::RowLength:
    return "row-length";
  case Violation::Kind::Range:
    return "range";
  case Violation::Kind::SumConstraint:
    return "sum-constraint";
  case Violation::Kind::LiarIndex:
    return "liar-index";
  case Violation::Kind::Scenario:
    return "scenario";
  }
  return "unknown";
}

std::vector<Violation> validate_vector(const PreferenceVector& vec, const Scenario& scenario,
                                       std::size_t expected_length)
{
  std::vector<Violation> out;
  if (vec.size() != expected_length)
  {
    out.push_back({Violation::Kind::RowLength, std::nullopt, std::nullopt, false,
                   "row has " + std::to_string(vec.size()) + " values, expected " +
                       std::to_string(expected_length)});
  }
  for (std::size_t j = 0; j < vec.size(); ++j)
  {
    const double v = vec[j];
    if (!(v >= kLowerBound && v <= kUpperBound))
    {
      out.push_back({Violation::Kind::Range, std::nullopt, j, false,
                     "value " + format_exact(v) + " outside [" + format_exact(kLowerBound) + ", " +
                         format_exact(kUpperBound) + "]"});
    }
  }
  if (scenario.is_limited())
  {
    const double sum = vec.sum();
    if (!(std::abs(sum - scenario.r) <= scenario.sum_tolerance))
    {
      out.push_back({Violation::Kind::SumConstraint, std::nullopt, std::nullopt, false,
                     "row sums to " + format_exact(sum) + ", expected " + format_exact(scenario.r) +
                         " within " + format_exact(scenario.sum_tolerance)});
    }
  }
  return out;
}

namespace {

std::vector<Violation> validate_scenario(const Scenario& scenario)
{
  std::vector<Violation> out;
  if (scenario.is_limited() && !(scenario.r > 0.0 && std::isfinite(scenario.r)))
  {
    out.push_back({Violation::Kind::Scenario, std::nullopt, std::nullopt, false,
                   "limited mode requires a positive finite r"});
  }
  if (!(scenario.sum_tolerance >= 0.0))
  {
    out.push_back({Violation::Kind::Scenario, std::nullopt, std::nullopt, false,
                   "sum tolerance must be non-negative"});
  }
  return out;
}

}  // namespace

std::vector<Violation> validate_profile(const PreferenceProfile& profile)
{
  auto out = validate_scenario(profile.scenario());
  if (profile.agents() < 2)
  {
    out.push_back({Violation::Kind::AgentCount, std::nullopt, std::nullopt, false,
                   "need at least 2 agents, got " + std::to_string(profile.agents())});
  }
  const std::size_t m = profile.resources();
  if (profile.agents() > 0 && m == 0)
  {
    out.push_back({Violation::Kind::ResourceCount, std::nullopt, std::nullopt, false,
                   "need at least 1 resource"});
  }
  for (std::size_t i = 0; i < profile.agents(); ++i)
  {
    for (auto v : validate_vector(profile.row(i), profile.scenario(), m))
    {
      v.agent = i;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Violation> validate_instance(const ProblemInstance& inst)
{
  auto out = validate_profile(inst.profile);
  if (inst.liar >= inst.profile.agents())
  {
    out.push_back({Violation::Kind::LiarIndex, std::nullopt, std::nullopt, false,
                   "liar " + std::to_string(inst.liar + 1) + " is not one of the " +
                       std::to_string(inst.profile.agents()) + " agents"});
  }
  for (auto v : validate_vector(inst.truth, inst.profile.scenario(), inst.profile.resources()))
  {
    v.agent = std::nullopt;
    v.truth_row = true;
    out.push_back(std::move(v));
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations)
{
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations)
  {
    if (!first)
    {
      os << '\n';
    }
    first = false;
    os << to_string(v.kind);
    if (v.truth_row)
    {
      os << " [truth";
    }
    else if (v.agent)
    {
      os << " [agent " << (*v.agent + 1);
    }
    if (v.truth_row || v.agent)
    {
      if (v.resource)
      {
        os << ", resource " << (*v.resource + 1);
      }
      os << ']';
    }
    else if (v.resource)
    {
      os << " [resource " << (*v.resource + 1) << ']';
    }
    os << ": " << v.message;
  }
  return os.str();
}

}  // namespace egal
