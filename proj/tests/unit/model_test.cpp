#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "chorediv/chorediv.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace chorediv;

namespace {

Instance make(std::vector<Valuation> agents, Count a = 0, Count b = 0) {
  return Instance{std::move(agents), a, b};
}

}  // namespace

TEST(Canonicalize, OrdersByRatio) {
  const auto ci = canonicalize(make({{-10, -1}, {-12, -1}, {-11, -1}}, 3, 2));
  EXPECT_EQ(ci.perm, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(ci.agent(1), (Valuation{-11, -1}));
  EXPECT_FALSE(ci.swappedTypes);
}

TEST(Canonicalize, SingleAgentIsIdentity) {
  const auto ci = canonicalize(make({{-1, -1}}));
  EXPECT_EQ(ci.perm, (std::vector<std::size_t>{0}));
}

TEST(Canonicalize, EqualRatiosKeepInputOrder) {
  const auto ci = canonicalize(make({{-2, -4}, {-1, -2}}));
  EXPECT_EQ(ci.perm, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(ratio_equal(ci.agent(0), ci.agent(1)));
}

TEST(Canonicalize, ZeroTypeBValueSortsLast) {
  const auto ci = canonicalize(make({{-1, 0}, {-5, -1}, {0, -1}}));
  EXPECT_EQ(ci.perm, (std::vector<std::size_t>{2, 1, 0}));
}

TEST(Canonicalize, EmptyAgentListIsRejected) {
  EXPECT_THROW(canonicalize(make({})), ValidationError);
}

TEST(Canonicalize, OversizedMagnitudeIsArithmeticError) {
  EXPECT_THROW(canonicalize(make({{-(kMaxMagnitude + 1), -1}})), ArithmeticError);
  EXPECT_NO_THROW(canonicalize(make({{-kMaxMagnitude, -kMaxMagnitude}})));
}

TEST(Canonicalize, MatchesFloatingPointReferenceOrder) {
  chorediv::testing::Generator gen(11);
  for (int s = 0; s < 2000; ++s) {
    const Instance instance = gen.instance(7, 3, 30);
    const auto ci = canonicalize(instance);
    std::vector<std::size_t> expected(instance.size());
    std::iota(expected.begin(), expected.end(), 0);
    std::stable_sort(expected.begin(), expected.end(), [&](auto x, auto y) {
      return chorediv::testing::ratio_of(instance.agents[x]) <
             chorediv::testing::ratio_of(instance.agents[y]);
    });
    ASSERT_EQ(ci.perm, expected);
  }
}

TEST(RatioLess, HugeValuesDoNotOverflow) {
  const Valuation x{-kMaxMagnitude, -1};
  const Valuation y{-kMaxMagnitude, -2};
  EXPECT_TRUE(ratio_less(y, x));
  EXPECT_FALSE(ratio_less(x, y));
}

TEST(Validate, RejectsBadInstances) {
  EXPECT_THROW(validate(make({{1, -1}})), ValidationError);
  EXPECT_THROW(validate(make({{-1, -1}}, -1, 0)), ValidationError);
  EXPECT_THROW(validate(make({{0, 0}}, 1, 0)), ValidationError);
  EXPECT_NO_THROW(validate(make({{0, 0}}, 0, 0)));
  EXPECT_THROW(validate(make({{-1, -1}}, kMaxMagnitude + 1, 0)), ArithmeticError);
}

TEST(ValidateAllocation, ChecksShapeAndCounts) {
  const Instance instance = make({{-1, -1}, {-1, -2}}, 2, 1);
  EXPECT_NO_THROW(validate_allocation(instance, Allocation{{{1, 1}, {1, 0}}}));
  EXPECT_THROW(validate_allocation(instance, Allocation{{{1, 1}}}), ValidationError);
  EXPECT_THROW(validate_allocation(instance, Allocation{{{-1, 1}, {3, 0}}}),
               ValidationError);
  EXPECT_THROW(validate_allocation(instance, Allocation{{{3, 1}, {0, 0}}}),
               ValidationError);
}

TEST(AgentGroups, SplitsByPreferredType) {
  EXPECT_EQ(agent_groups(canonicalize(make({{-1, -3}, {-3, -1}}))).preferA,
            (std::vector<std::size_t>{0}));
  EXPECT_EQ(agent_groups(canonicalize(make({{-1, -3}, {-3, -1}}))).preferB,
            (std::vector<std::size_t>{1}));
  const auto tie = agent_groups(canonicalize(make({{-1, -1}})));
  EXPECT_EQ(tie.preferA.size(), 1u);
  EXPECT_TRUE(tie.preferB.empty());
}

TEST(AgentGroups, GoodsAdaptationFixture) {
  const auto groups =
      agent_groups(canonicalize(fixture_instance("goods-adaptation")));
  EXPECT_EQ(groups.preferA.size(), 1u);
  EXPECT_EQ(groups.preferB.size(), 3u);
}

TEST(StronglyPrefers, Examples) {
  const auto ci = canonicalize(make({{-1, -3}, {-2, -3}, {-3, -1}}));
  EXPECT_EQ(strongly_prefers(ci, 0), StrongPreference::StronglyA);
  EXPECT_EQ(strongly_prefers(ci, 1), StrongPreference::Neither);
  EXPECT_EQ(strongly_prefers(ci, 2), StrongPreference::StronglyB);
}

TEST(BundleValue, Examples) {
  EXPECT_EQ(bundle_value(Valuation{-10, -1}, Bundle{1, 2}), -12);
  EXPECT_EQ(bundle_value(Valuation{-7, -3}, Bundle{0, 0}), 0);
  EXPECT_EQ(bundle_value(Valuation{-47, -53}, Bundle{3, 3}), -300);
}

TEST(BundleValue, OverflowIsDetected) {
  const Valuation v{-kMaxMagnitude, -kMaxMagnitude};
  EXPECT_NO_THROW(bundle_value(v, Bundle{kMaxMagnitude, kMaxMagnitude}));
  const Count big = std::numeric_limits<Count>::max() / 2;
  EXPECT_THROW(bundle_value(v, Bundle{big, big}), ArithmeticError);
}

TEST(IndexMaps, RoundTrip) {
  chorediv::testing::Generator gen(12);
  for (int s = 0; s < 500; ++s) {
    const Instance instance = gen.instance(6, 6, 9);
    CanonicalInstance ci = canonicalize(instance);
    const Allocation X = gen.complete_allocation(instance);
    EXPECT_EQ(to_original(ci, to_canonical(ci, X)), X);
    ci.swappedTypes = true;
    EXPECT_EQ(to_original(ci, to_canonical(ci, X)), X);
  }
}

TEST(IndexMaps, CanonicalBundleFollowsAgent) {
  const Instance instance = make({{-10, -1}, {-12, -1}, {-11, -1}}, 3, 2);
  const auto ci = canonicalize(instance);
  const Allocation X{{{1, 0}, {2, 0}, {0, 2}}};
  const Allocation canonical = to_canonical(ci, X);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(canonical.bundles[i], X.bundles[ci.perm[i]]);
  }
}

TEST(SwapTypes, IsAnInvolution) {
  const Instance instance = make({{-1, -4}, {-2, -3}}, 5, 2);
  const Instance swapped = swap_types(instance);
  EXPECT_EQ(swapped.countA, 2);
  EXPECT_EQ(swapped.agents[0], (Valuation{-4, -1}));
  EXPECT_EQ(swap_types(swapped), instance);
  const Allocation X{{{1, 2}, {4, 0}}};
  EXPECT_EQ(swap_types(X).bundles[0], (Bundle{2, 1}));
}

TEST(RoundRobinCounts, SpreadsEvenlyFromTheFront) {
  EXPECT_EQ(round_robin_counts(5, 3), (std::vector<Count>{2, 2, 1}));
  EXPECT_EQ(round_robin_counts(2, 4), (std::vector<Count>{1, 1, 0, 0}));
  EXPECT_TRUE(round_robin_counts(3, 0).empty());
}

TEST(ZeroValuation, BothTypesHaveZeroHolders) {
  const auto X = zero_valuation_allocation(make({{-1, -1}, {0, -1}, {-1, 0}}, 3, 4));
  ASSERT_TRUE(X);
  EXPECT_EQ(*X, (Allocation{{{0, 0}, {3, 0}, {0, 4}}}));
}

TEST(ZeroValuation, OneZeroTypeSplitsTheOther) {
  const Instance instance = make({{-2, -1}, {0, -3}, {-1, -1}}, 4, 5);
  const auto X = zero_valuation_allocation(instance);
  ASSERT_TRUE(X);
  EXPECT_EQ(*X, (Allocation{{{0, 2}, {4, 2}, {0, 1}}}));
  EXPECT_TRUE(is_efx(instance.agents, *X));
}

TEST(ZeroValuation, AbsentWhenAllNegative) {
  EXPECT_FALSE(zero_valuation_allocation(make({{-1, -2}}, 1, 1)));
}
