#include <gtest/gtest.h>

#include "chorediv/chorediv.hpp"
#include "generators.hpp"

using namespace chorediv;

namespace {

CanonicalInstance impossibility() {
  return canonicalize(fixture_instance("efx-fpo-impossible"));
}

}  // namespace

TEST(CheckStructure, SatisfiedWhenOnlyLastAgentHoldsB) {
  const auto v = check_structure(impossibility(), Allocation{{{1, 0}, {1, 0}, {1, 2}}});
  EXPECT_TRUE(v.satisfied);
  ASSERT_TRUE(v.witnessRange);
  EXPECT_EQ(*v.witnessRange, (AgentRange{2, 2}));
  EXPECT_FALSE(v.violation);
}

TEST(CheckStructure, ViolationNamesFirstBHolderAndLastAHolder) {
  const auto v = check_structure(impossibility(), Allocation{{{1, 1}, {1, 1}, {1, 0}}});
  EXPECT_FALSE(v.satisfied);
  ASSERT_TRUE(v.violation);
  EXPECT_EQ(*v.violation, (ViolatingPair{0, 2}));
}

TEST(CheckStructure, SingleAgentAlwaysSatisfied) {
  const auto ci = canonicalize(Instance{{{-3, -7}}, 4, 9});
  EXPECT_TRUE(check_structure(ci, Allocation{{{4, 9}}}).satisfied);
}

TEST(CheckStructure, EqualRatioAgentsShareAPivotClass) {
  // Agents 0 and 1 have the same ratio, so both may hold both types.
  const auto ci = canonicalize(Instance{{{-1, -1}, {-2, -2}, {-5, -1}}, 2, 2});
  const auto v = check_structure(ci, Allocation{{{1, 1}, {1, 1}, {0, 0}}});
  EXPECT_TRUE(v.satisfied);
  EXPECT_EQ(*v.witnessRange, (AgentRange{0, 1}));
}

TEST(CheckStructure, WitnessRangeCoversAllValidPivots) {
  const auto ci = canonicalize(Instance{{{-1, -4}, {-2, -3}, {-3, -2}, {-4, -1}}, 1, 1});
  const auto v = check_structure(ci, Allocation{{{1, 0}, {0, 0}, {0, 0}, {0, 1}}});
  EXPECT_EQ(*v.witnessRange, (AgentRange{0, 3}));
  for (std::size_t p = 0; p < 4; ++p) {
    EXPECT_TRUE(is_ordered_wrt(Allocation{{{1, 0}, {0, 0}, {0, 0}, {0, 1}}}, p));
  }
}

TEST(CheckStructure, ZeroValuationIsAContractError) {
  const auto ci = canonicalize(Instance{{{0, -1}, {-1, -1}}, 1, 1});
  EXPECT_THROW(check_structure(ci, Allocation{{{1, 0}, {0, 1}}}), ContractError);
}

TEST(BuildImprovement, KeepsDonorIndifferent) {
  const auto ci = canonicalize(Instance{{{-1, -2}, {-3, -2}}, 1, 2});
  const Allocation X{{{0, 2}, {1, 0}}};
  const auto t = build_improvement(ci, X, {0, 1});
  EXPECT_EQ(t.epsilon, Rational(1));
  EXPECT_EQ(t.bRate, Rational(1, 2));
  const auto Y = apply_transfer(X, t);
  EXPECT_EQ(fractional_value(ci.agent(0), Y[0]), Rational(-4));
  EXPECT_EQ(fractional_value(ci.agent(1), Y[1]), Rational(-1));
  EXPECT_TRUE(is_strict_improvement(ci, X, t));
}

TEST(BuildImprovement, UnitRate) {
  const auto ci = canonicalize(Instance{{{-1, -1}, {-2, -1}}, 2, 1});
  const auto t = build_improvement(ci, Allocation{{{0, 1}, {2, 0}}}, {0, 1});
  EXPECT_EQ(t.epsilon, Rational(1));
  EXPECT_EQ(t.bRate, Rational(1));
}

TEST(BuildImprovement, BSideBoundCanBind) {
  const auto ci = canonicalize(Instance{{{-4, -1}, {-9, -1}}, 2, 1});
  const Allocation X{{{0, 1}, {2, 0}}};
  const auto t = build_improvement(ci, X, {0, 1});
  EXPECT_EQ(t.epsilon, Rational(1, 4));
  EXPECT_EQ(t.bRate, Rational(1));
  EXPECT_TRUE(is_strict_improvement(ci, X, t));
}

TEST(BuildImprovement, RejectsNonViolatingPair) {
  const auto ci = impossibility();
  EXPECT_THROW(build_improvement(ci, Allocation{{{1, 0}, {1, 0}, {1, 2}}}, {0, 2}),
               ContractError);
  EXPECT_THROW(build_improvement(ci, Allocation{{{1, 1}, {1, 1}, {1, 0}}}, {2, 0}),
               ContractError);
}

TEST(BuildImprovement, EveryViolationImprovesOnRandomInstances) {
  chorediv::testing::Generator gen(31);
  int violations = 0;
  for (int s = 0; s < 3000; ++s) {
    const Instance instance = gen.instance(5, 7, 15);
    const auto ci = canonicalize(instance);
    const Allocation X = gen.complete_allocation(ci.base);
    const auto v = check_structure(ci, X);
    ASSERT_EQ(v.satisfied, !v.violation.has_value());
    if (!v.violation) continue;
    ++violations;
    ASSERT_TRUE(is_strict_improvement(ci, X, build_improvement(ci, X, *v.violation)));
  }
  EXPECT_GT(violations, 500);
}

TEST(IsStrictImprovement, RejectsOverdrawnTransfer) {
  const auto ci = canonicalize(Instance{{{-1, -2}, {-3, -2}}, 1, 2});
  const Allocation X{{{0, 2}, {1, 0}}};
  auto t = build_improvement(ci, X, {0, 1});
  t.epsilon = Rational(2);
  t.bRate = Rational(1);
  EXPECT_FALSE(is_strict_improvement(ci, X, t));
}

TEST(ParetoDominates, Examples) {
  const auto ci = canonicalize(Instance{{{-1, -1}, {-1, -1}}, 2, 0});
  const Allocation X{{{2, 0}, {0, 0}}};
  EXPECT_FALSE(pareto_dominates(ci, X, X));
  EXPECT_FALSE(pareto_dominates(ci, Allocation{{{1, 0}, {1, 0}}}, X));
  const auto single = canonicalize(Instance{{{-2, -3}}, 1, 1});
  EXPECT_FALSE(pareto_dominates(single, Allocation{{{1, 1}}}, Allocation{{{1, 1}}}));
}

TEST(ParetoDominates, StrictGainWithoutLoss) {
  const std::vector<Valuation> agents{{-1, -3}, {-3, -1}};
  EXPECT_TRUE(pareto_dominates(agents, Allocation{{{1, 0}, {0, 1}}},
                               Allocation{{{0, 1}, {1, 0}}}));
}

TEST(IsOrderedWrt, Basics) {
  const Allocation X{{{2, 0}, {1, 1}, {0, 3}}};
  EXPECT_TRUE(is_ordered_wrt(X, 1));
  EXPECT_FALSE(is_ordered_wrt(X, 0));
  EXPECT_FALSE(is_ordered_wrt(X, 2));
}
