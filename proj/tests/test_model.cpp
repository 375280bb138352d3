#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "egal/model.hpp"
#include "support.hpp"

namespace egal {
namespace {

using testing::table1;
using testing::table1_rows;
using testing::table2;

const std::size_t kReferenceAlloc[] = {4, 2, 1, 3, 2, 4, 1, 3, 4, 1};

TEST(AgentUtility, Table1RowsUnderReferenceAllocation)
{
  const auto alloc = Allocation::from_labels(kReferenceAlloc);
  const auto rows = table1_rows();
  EXPECT_NEAR(agent_utility(alloc, rows[0], 0), 221.08, 1e-9);
  EXPECT_NEAR(agent_utility(alloc, rows[1], 1), 96.73 + 86.95, 1e-9);
  EXPECT_NEAR(agent_utility(alloc, rows[1], 1), 183.68, 1e-9);
}

TEST(AgentUtility, EmptyBundleIsZero)
{
  const Allocation alloc{1, 1, 1};
  EXPECT_EQ(agent_utility(alloc, PreferenceVector{10.0, 20.0, 30.0}, 0), 0.0);
}

TEST(AgentUtility, LengthMismatchThrows)
{
  EXPECT_THROW(agent_utility(Allocation{0, 1}, PreferenceVector{1.0, 2.0, 3.0}, 0), DimensionError);
}

TEST(EgalitarianWelfare, Table1ReferenceAllocation)
{
  const auto inst = table1();
  const auto alloc = Allocation::from_labels(kReferenceAlloc);
  const auto u = agent_utilities(alloc, inst.profile);
  EXPECT_NEAR(u[0], 221.08, 1e-9);
  EXPECT_NEAR(u[1], 183.68, 1e-9);
  EXPECT_NEAR(u[2], 183.90, 1e-9);
  EXPECT_NEAR(u[3], 208.41, 1e-9);
  EXPECT_NEAR(egalitarian_welfare(alloc, inst.profile).value, 183.68, 1e-9);
}

TEST(EgalitarianWelfare, EverythingToOneAgentIsZero)
{
  const auto inst = table1();
  const Allocation alloc(std::vector<AgentIndex>(10, 0));
  EXPECT_EQ(egalitarian_welfare(alloc, inst.profile).value, 0.0);
}

TEST(EgalitarianWelfare, SingleResourceTwoAgents)
{
  const PreferenceProfile profile{{PreferenceVector{30.0}, PreferenceVector{70.0}}};
  EXPECT_EQ(egalitarian_welfare(Allocation{0}, profile).value, 0.0);
  EXPECT_EQ(egalitarian_welfare(Allocation{1}, profile).value, 0.0);
}

TEST(EgalitarianWelfare, RejectsOutOfRangeOwner)
{
  const PreferenceProfile profile{{PreferenceVector{30.0}, PreferenceVector{70.0}}};
  EXPECT_THROW(egalitarian_welfare(Allocation{2}, profile), DimensionError);
  EXPECT_THROW(egalitarian_welfare(Allocation{0, 1}, profile), DimensionError);
}

TEST(EgalitarianWelfare, PropertiesOnRandomProfiles)
{
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial)
  {
    const std::size_t n = 2 + rng.below(4);
    const std::size_t m = 1 + rng.below(9);
    const auto profile = testing::random_profile(rng, n, m);
    std::vector<AgentIndex> owner(m);
    for (auto& o : owner)
    {
      o = rng.below(n);
    }
    const Allocation alloc{owner};

    // Welfare is the minimum agent utility.
    double lowest = agent_utility(alloc, profile.row(0), 0);
    for (std::size_t i = 1; i < n; ++i)
    {
      lowest = std::min(lowest, agent_utility(alloc, profile.row(i), i));
    }
    EXPECT_EQ(egalitarian_welfare(alloc, profile).value, lowest);

    // Additivity across a split bundle.
    const auto& prefs = profile.row(0);
    const auto bundle = alloc.bundle(0);
    std::vector<AgentIndex> first(owner), second(owner);
    for (std::size_t k = 0; k < bundle.size(); ++k)
    {
      (k % 2 == 0 ? second : first)[bundle[k]] = n;  // n is nobody
    }
    EXPECT_NEAR(agent_utility(Allocation{first}, prefs, 0) +
                    agent_utility(Allocation{second}, prefs, 0),
                agent_utility(alloc, prefs, 0), 1e-9);

    // Relabelling resources consistently preserves utilities.
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = m; k > 1; --k)
    {
      std::swap(perm[k - 1], perm[rng.below(k)]);
    }
    std::vector<PreferenceVector> rows;
    for (std::size_t i = 0; i < n; ++i)
    {
      std::vector<double> v(m);
      for (std::size_t j = 0; j < m; ++j)
      {
        v[j] = profile.row(i)[perm[j]];
      }
      rows.emplace_back(std::move(v));
    }
    std::vector<AgentIndex> permuted(m);
    for (std::size_t j = 0; j < m; ++j)
    {
      permuted[j] = owner[perm[j]];
    }
    const PreferenceProfile shuffled{rows};
    for (std::size_t i = 0; i < n; ++i)
    {
      EXPECT_NEAR(agent_utility(Allocation{permuted}, shuffled.row(i), i),
                  agent_utility(alloc, profile.row(i), i), 1e-9);
    }
  }
}

TEST(EgalitarianWelfare, LimitedRowGivesRWhenOneAgentTakesAll)
{
  Rng rng(5);
  const auto scenario = Scenario::limited(100.0);
  for (int trial = 0; trial < 50; ++trial)
  {
    const auto row = testing::random_row(rng, 3 + rng.below(8), scenario);
    const Allocation all(std::vector<AgentIndex>(row.size(), 0));
    EXPECT_NEAR(agent_utility(all, row, 0), 100.0, 1e-9);
  }
}

TEST(Validation, Table2AcceptedWithTableTolerance)
{
  EXPECT_TRUE(validate_instance(table2()).empty()) << describe(validate_instance(table2()));
}

TEST(Validation, Table2RejectedWithStrictTolerance)
{
  auto inst = table2();
  inst.profile = PreferenceProfile{inst.profile.rows(), Scenario::limited(100.0)};
  const auto v = validate_instance(inst);
  // All four agent rows plus the truth row miss 100 by ~0.05.
  EXPECT_EQ(std::count_if(v.begin(), v.end(),
                          [](const Violation& x) { return x.kind == Violation::Kind::SumConstraint; }),
            5);
}

TEST(Validation, RowSummingTo99IsReported)
{
  const PreferenceVector good{50.0, 50.0};
  const PreferenceVector short_row{49.0, 50.0};
  const PreferenceProfile profile{{good, short_row}, Scenario::limited(100.0)};
  const auto v = validate_instance(ProblemInstance{profile, 0, good});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::SumConstraint);
  EXPECT_EQ(v[0].agent, std::optional<AgentIndex>(1));
  EXPECT_FALSE(v[0].truth_row);
}

TEST(Validation, ZeroIsOutsideTheOpenInterval)
{
  const PreferenceVector row{10.0, 0.0, 30.0};
  const PreferenceVector ok{10.0, 20.0, 30.0};
  const auto v = validate_instance(ProblemInstance{PreferenceProfile{{ok, row}}, 0, ok});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Range);
  EXPECT_EQ(v[0].agent, std::optional<AgentIndex>(1));
  EXPECT_EQ(v[0].resource, std::optional<ResourceIndex>(1));
  EXPECT_NE(describe(v).find("[agent 2, resource 2]"), std::string::npos);
}

TEST(Validation, HundredIsOutsideTheOpenInterval)
{
  const PreferenceVector ok{10.0, 20.0};
  const PreferenceVector bad{100.0, 20.0};
  const auto v = validate_instance(ProblemInstance{PreferenceProfile{{ok, ok}}, 0, bad});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].truth_row);
  EXPECT_EQ(v[0].resource, std::optional<ResourceIndex>(0));
}

TEST(Validation, EnumeratesEveryViolation)
{
  const PreferenceVector ok{10.0, 20.0};
  PreferenceProfile profile{{ok, PreferenceVector{0.0, -1.0, 5.0}}, Scenario::limited(30.0)};
  const auto v = validate_instance(ProblemInstance{profile, 7, PreferenceVector{1.0}});
  auto count = [&](Violation::Kind k) {
    return std::count_if(v.begin(), v.end(), [k](const Violation& x) { return x.kind == k; });
  };
  EXPECT_EQ(count(Violation::Kind::RowLength), 2);
  EXPECT_EQ(count(Violation::Kind::Range), 2);
  EXPECT_EQ(count(Violation::Kind::SumConstraint), 2);
  EXPECT_EQ(count(Violation::Kind::LiarIndex), 1);
}

TEST(Validation, NeedsTwoAgents)
{
  const PreferenceVector ok{10.0, 20.0};
  const auto v = validate_instance(ProblemInstance{PreferenceProfile{{ok}}, 0, ok});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::AgentCount);
}

TEST(Validation, EpsilonBoundsAreInclusive)
{
  const PreferenceVector edge{kLowerBound, kUpperBound};
  EXPECT_TRUE(validate_vector(edge, Scenario::unlimited(), 2).empty());
  const PreferenceVector below{kLowerBound / 2, 50.0};
  EXPECT_EQ(validate_vector(below, Scenario::unlimited(), 2).size(), 1u);
}

TEST(Profile, WithRowAndRivals)
{
  const auto inst = table1();
  const auto p = inst.reported_profile(testing::kTable1Lie);
  EXPECT_EQ(p.row(0), testing::kTable1Lie);
  EXPECT_EQ(p.row(1), inst.profile.row(1));
  const auto rivals = inst.rivals();
  ASSERT_EQ(rivals.size(), 3u);
  EXPECT_EQ(rivals[0], inst.profile.row(1));
  EXPECT_THROW(inst.profile.with_row(4, testing::kTable1Lie), DimensionError);
}

}  // namespace
}  // namespace egal
