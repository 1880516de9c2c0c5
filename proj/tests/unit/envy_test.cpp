#include <gtest/gtest.h>

#include "chorediv/chorediv.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace chorediv;
namespace ref = chorediv::testing;

TEST(Envies, Examples) {
  EXPECT_TRUE(envies({-1, -2}, {2, 1}, {1, 0}));
  EXPECT_FALSE(envies({-3, -5}, {2, 2}, {2, 2}));
  EXPECT_TRUE(envies({-10, -1}, {1, 0}, {0, 2}));
}

TEST(Ef1Envies, Examples) {
  EXPECT_FALSE(ef1_envies({-1, -1}, {2, 0}, {1, 0}));
  EXPECT_TRUE(ef1_envies({-1, -2}, {2, 1}, {0, 0}));
  EXPECT_FALSE(ef1_envies({-1, -1}, {0, 0}, {0, 5}));
}

TEST(EfxEnvies, Examples) {
  EXPECT_TRUE(efx_envies({-1, -3}, {1, 1}, {0, 0}));
  EXPECT_FALSE(efx_envies({-1, -3}, {2, 0}, {1, 0}));
  EXPECT_FALSE(efx_envies({0, -1}, {5, 1}, {5, 0}));
}

TEST(EfxEnvies, ZeroValuedItemsAreNotRemovalCandidates) {
  // Dropping a zero-valued A would not help; dropping the B leaves -1 < 0.
  EXPECT_TRUE(efx_envies({0, -1}, {3, 2}, {0, 0}));
  EXPECT_FALSE(ef1_envies({0, -1}, {3, 1}, {0, 0}));
}

TEST(PairwisePredicates, MatchItemLevelReference) {
  ref::Generator gen(21);
  for (int s = 0; s < 20000; ++s) {
    Valuation v{-gen.count(0, 6), -gen.count(0, 6)};
    const Bundle own = gen.bundle(4);
    const Bundle other = gen.bundle(4);
    ASSERT_EQ(envies(v, own, other), ref::ref_envies(v, own, other));
    ASSERT_EQ(ef1_envies(v, own, other), ref::ref_ef1_envies(v, own, other));
    ASSERT_EQ(efx_envies(v, own, other), ref::ref_efx_envies(v, own, other));
  }
}

TEST(Report, ImpossibilityInstanceAllocation) {
  const Instance instance = fixture_instance("efx-fpo-impossible");
  const auto ci = canonicalize(instance);
  const Allocation X{{{1, 0}, {1, 0}, {1, 2}}};
  const EnvyReport r = report(ci, X);
  EXPECT_FALSE(r.ef);
  EXPECT_TRUE(r.ef1);
  EXPECT_FALSE(r.efx);
  ASSERT_TRUE(r.efxWitness);
  EXPECT_EQ(r.efxWitness->envier, 2u);
  EXPECT_EQ(r.efxWitness->level, EnvyLevel::EFX);
  EXPECT_FALSE(r.ef1Witness);
}

TEST(Report, ZeroValuedHolderIsEnvyFree) {
  const std::vector<Valuation> agents{{0, -1}, {-1, -1}, {-2, -1}};
  EXPECT_TRUE(is_ef(agents, Allocation{{{4, 0}, {0, 0}, {0, 0}}}));
}

TEST(Report, IdenticalAgentsEqualBundles) {
  const std::vector<Valuation> agents(3, Valuation{-1, -1});
  EXPECT_TRUE(is_ef(agents, Allocation{{{1, 0}, {1, 0}, {1, 0}}}));
}

TEST(Report, UniformProfileJudgesWithOneValuation) {
  const std::vector<Valuation> agents{{-1, -10}, {-10, -1}};
  const Allocation X{{{0, 1}, {1, 0}}};
  EXPECT_FALSE(is_ef(agents, X));
  // Both agents judged with (-1,-10): agent 0 holds -10 against -1.
  const auto w = find_violation(agents, X, EnvyLevel::EF, EnvyProfile::uniform(0));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->envier, 0u);
  EXPECT_EQ(w->envied, 1u);
  const auto w1 = find_violation(agents, X, EnvyLevel::EF, EnvyProfile::uniform(1));
  ASSERT_TRUE(w1);
  EXPECT_EQ(w1->envier, 1u);
}

TEST(Report, WitnessIsFirstInEnvierMajorOrder) {
  const std::vector<Valuation> agents(3, Valuation{-1, -1});
  const Allocation X{{{0, 3}, {2, 0}, {0, 0}}};
  const auto w = find_violation(agents, X, EnvyLevel::EF);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (EnvyWitness{0, 1, EnvyLevel::EF}));
}

TEST(Report, LevelsAreNested) {
  ref::Generator gen(22);
  for (int s = 0; s < 3000; ++s) {
    const Instance instance = gen.instance(4, 6, 5);
    const Allocation X = gen.complete_allocation(instance);
    const EnvyReport r = report(std::span<const Valuation>(instance.agents), X);
    if (r.ef) ASSERT_TRUE(r.efx);
    if (r.efx) ASSERT_TRUE(r.ef1);
    ASSERT_EQ(r.ef, !r.efWitness.has_value());
  }
}
