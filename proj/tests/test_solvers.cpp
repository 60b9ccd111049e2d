#include <gtest/gtest.h>

#include "aef/error.hpp"
#include "aef/fairness.hpp"
#include "aef/reductions.hpp"
#include "aef/solvers.hpp"
#include "oracles.hpp"

namespace {

using aef::Allocation;
using aef::DpState;
using aef::Instance;
using aef::Quota;
using aef::Rational;

// All 2^(n*m) binary instances, in a fixed order.
Instance binary_from_mask(std::size_t n, std::size_t m, std::uint64_t mask) {
  std::vector<Rational> values;
  for (std::size_t bit = 0; bit < n * m; ++bit) values.emplace_back((mask >> bit & 1) ? 1 : 0);
  return Instance(n, m, std::move(values));
}

TEST(Picking, HandExecutedExamples) {
  const Instance inst = Instance::from_rows({{3, 2, 1}, {1, 2, 3}});
  const Allocation a = aef::solve_aef1_picking(inst);
  EXPECT_EQ(a, Allocation({0, 1, 1}));
  EXPECT_TRUE(aef::is_aef1(inst, a).fair);

  const Instance few = Instance::from_rows({{5, 1}, {5, 1}, {5, 1}});
  const Allocation b = aef::solve_aef1_picking(few);
  EXPECT_EQ(b, Allocation({0, 1}));
  EXPECT_TRUE(aef::is_aef1(few, b).fair);

  const Instance none(3, 0, {});
  EXPECT_TRUE(aef::is_aef(none, aef::solve_aef1_picking(none)).fair);
}

TEST(Picking, TiesGoToLowestIndex) {
  const Instance inst = Instance::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(aef::solve_aef1_picking(inst), Allocation({0, 1, 2}));
}

TEST(BruteForce, PartitionGadgets) {
  const std::vector<std::int64_t> yes{1, 1, 3, 3};
  const auto found = aef::brute_force_aef(aef::gen_from_partition(yes).instance);
  ASSERT_TRUE(found);
  EXPECT_TRUE(aef::is_aef(aef::gen_from_partition(yes).instance, *found).fair);
  const std::vector<std::int64_t> no{1, 1, 1, 5};
  EXPECT_FALSE(aef::brute_force_aef(aef::gen_from_partition(no).instance));
}

TEST(BruteForce, SingleAgentTakesEverything) {
  const Instance inst = Instance::from_rows({{1, 2, 3}});
  EXPECT_EQ(aef::brute_force_aef(inst), Allocation({0, 0, 0}));
}

TEST(BruteForce, QuotaWithEmptyAgentHasNoAef1) {
  const Instance inst = Instance::from_rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(aef::brute_force_aef1(inst, Quota::exact({2, 0})));
}

TEST(BruteForce, EqcardGadgetWithQuota) {
  const std::vector<std::int64_t> ones(8, 1);
  const auto gadget = aef::gen_from_eqcard_partition(ones);
  const auto found =
      aef::brute_force_aef1(gadget.instance, gadget.quota, {std::uint64_t{1} << 30});
  ASSERT_TRUE(found);
  EXPECT_TRUE(aef::is_aef1(gadget.instance, *found).fair);
  EXPECT_TRUE(aef::satisfies_quota(*found, *gadget.quota).satisfied);
}

TEST(BruteForce, CapIsEnforced) {
  const Instance inst = aef::gen_random(2, 24, aef::BinaryModel{Rational(1, 2)}, 1);
  EXPECT_THROW(aef::brute_force_aef1(inst, Quota::exact(2, 12)), aef::ResourceLimitError);
  EXPECT_THROW(aef::brute_force_aef(aef::gen_random(10, 8, aef::BinaryModel{1}, 1)),
               aef::ResourceLimitError);
}

TEST(BruteForce, FirstHitMatchesOdometerOrder) {
  aef::Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + aef::draw_below(rng, 3);
    const std::size_t m = aef::draw_below(rng, 6);
    const Instance inst = aef::gen_random(n, m, aef::UniformIntModel{0, 3}, rng());
    const Quota quota = aef::random_feasible_quota(n, m, rng);
    std::optional<Allocation> expected;
    oracle::for_each_allocation(n, m, [&](const Allocation& a) {
      if (oracle::quota_ok(a, quota) && oracle::aef(inst, a)) expected = a;
      return !expected;
    });
    ASSERT_EQ(aef::brute_force_aef(inst, quota), expected) << "trial " << trial;
  }
}

TEST(StateCheck, Examples) {
  const Quota loose = Quota::unbounded(2, 4);
  EXPECT_TRUE(aef::check_state_aef1_binary(DpState{{2, 2}, {2, 2, 2, 2}, 4}, loose, 4));
  EXPECT_TRUE(aef::check_state_aef1_binary(DpState{{1, 1}, {1, 0, 1, 0}, 2}, loose, 2));
  EXPECT_FALSE(aef::check_state_aef1_binary(DpState{{2, 0}, {2, 0, 2, 0}, 2}, loose, 2));
  EXPECT_FALSE(aef::check_state_aef1_binary(DpState{{2, 2}, {2, 2, 2, 2}, 4}, Quota::exact({3, 1}),
                                            4));
  EXPECT_THROW(aef::check_state_aef1_binary(DpState{{1, 1}, {0, 0, 0, 0}, 2}, loose, 3),
               aef::InputError);
}

// Any realizing allocation of a state has the same AEF-1 verdict as the state.
TEST(StateCheck, AgreesWithCheckerOnAllSmallBinaryAllocations) {
  const std::size_t n = 2;
  for (std::size_t m = 0; m <= 5; ++m) {
    const Quota loose = Quota::unbounded(n, m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * m)); ++mask) {
      const Instance inst = binary_from_mask(n, m, mask);
      oracle::for_each_allocation(n, m, [&](const Allocation& a) {
        DpState state{std::vector<std::size_t>(n, 0), std::vector<std::int64_t>(n * n, 0), m};
        for (std::size_t g = 0; g < m; ++g) {
          ++state.sizes[a.owner(g)];
          for (std::size_t i = 0; i < n; ++i) {
            state.cross[i * n + a.owner(g)] += inst.value(i, g).is_zero() ? 0 : 1;
          }
        }
        EXPECT_EQ(aef::check_state_aef1_binary(state, loose, m), oracle::aef1(inst, a))
            << "m=" << m << " mask=" << mask;
        return true;
      });
    }
  }
}

TEST(DpBinary, Examples) {
  const Instance two_ones = Instance::from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}});
  const auto found = aef::dp_binary_quota(two_ones, Quota::exact(2, 2));
  ASSERT_TRUE(found);
  EXPECT_TRUE(aef::is_aef(two_ones, *found).fair);

  const Instance zeros(3, 6, std::vector<Rational>(18, 0));
  const auto balanced = aef::dp_binary_quota(zeros, Quota::exact(3, 2));
  ASSERT_TRUE(balanced);
  EXPECT_EQ(balanced->bundle_sizes(3), (std::vector<std::size_t>{2, 2, 2}));

  EXPECT_FALSE(aef::dp_binary_quota(Instance::from_rows({{1, 1}, {1, 1}}), Quota::exact({2, 0})));
  EXPECT_FALSE(aef::dp_binary_quota(two_ones, Quota::exact(2, 3)));
  EXPECT_THROW(aef::dp_binary_quota(Instance::from_rows({{2}}), Quota::exact(1, 1)),
               aef::InputError);
}

TEST(DpBinary, ResourceLimit) {
  const Instance inst = aef::gen_random(3, 12, aef::BinaryModel{Rational(1, 2)}, 9);
  aef::SearchLimits limits;
  limits.max_states = 5;
  EXPECT_THROW(aef::dp_binary_quota(inst, Quota::unbounded(3, 12), limits),
               aef::ResourceLimitError);
}

// Exhaustive over value matrices for n = 2, m <= 5 and a few quotas.
TEST(DpBinary, AgreesWithBruteForceSweep) {
  const std::size_t n = 2;
  for (std::size_t m = 0; m <= 5; ++m) {
    const std::vector<Quota> quotas{Quota::exact({m / 2, m - m / 2}), Quota::unbounded(n, m),
                                    Quota({0, 1}, {m, m + 1})};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * m)); ++mask) {
      const Instance inst = binary_from_mask(n, m, mask);
      for (const auto& quota : quotas) {
        const bool expected = oracle::exists(inst, quota, [&](const Allocation& a) {
          return oracle::aef1(inst, a);
        });
        for (const bool prune : {true, false}) {
          aef::SearchLimits limits;
          limits.prune_by_quota = prune;
          const auto found = aef::dp_binary_quota(inst, quota, limits);
          ASSERT_EQ(found.has_value(), expected) << "m=" << m << " mask=" << mask;
          if (found) {
            ASSERT_TRUE(oracle::aef1(inst, *found));
            ASSERT_TRUE(oracle::quota_ok(*found, quota));
          }
        }
      }
    }
  }
}

TEST(DpBinary, EmbeddingOfEnvyFreeInstance) {
  const auto gadget = aef::gen_ef_embedding(Instance::from_rows({{1, 1}, {1, 1}}));
  const auto found = aef::dp_binary_quota(gadget.instance, *gadget.quota);
  ASSERT_TRUE(found);
  EXPECT_TRUE(aef::is_aef(gadget.instance, *found).fair);
}

}  // namespace
