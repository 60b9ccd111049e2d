#include <gtest/gtest.h>

#include "aef/error.hpp"
#include "aef/fairness.hpp"
#include "aef/reductions.hpp"
#include "aef/solvers.hpp"
#include "oracles.hpp"

namespace {

using aef::Allocation;
using aef::Instance;
using aef::Quota;
using aef::Rational;

TEST(PartitionGadget, Values) {
  const std::vector<std::int64_t> xs{1, 1, 3, 3};
  const auto gadget = aef::gen_from_partition(xs);
  const Instance& inst = gadget.instance;
  ASSERT_EQ(inst.agents(), 2u);
  ASSERT_EQ(inst.items(), 8u);
  EXPECT_EQ(gadget.info.k, 4u);
  EXPECT_EQ(gadget.info.target, Rational(4));
  EXPECT_TRUE(gadget.info.valid_assumptions);
  EXPECT_EQ(inst.value(0, 0), Rational(256));
  EXPECT_EQ(inst.value(0, 1), Rational(257));
  EXPECT_EQ(inst.value(1, 7), Rational(4294967299));
  EXPECT_EQ(inst.item_labels()[7], "gl4");
  EXPECT_EQ(inst.row(0)[6], inst.row(1)[6]);
  EXPECT_THROW(aef::gen_from_partition(std::vector<std::int64_t>{}), aef::InputError);
  EXPECT_THROW(aef::gen_from_partition(std::vector<std::int64_t>{1, 0}), aef::InputError);
}

TEST(PartitionGadget, OddSumIsFlagged) {
  const std::vector<std::int64_t> xs{1, 2};
  const auto gadget = aef::gen_from_partition(xs);
  EXPECT_FALSE(gadget.info.sum_even);
  EXPECT_EQ(gadget.info.target, Rational(3, 2));
}

TEST(PartitionGadget, EquivalenceOnSmallPools) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t b = a; b <= 3; ++b) {
      for (std::int64_t c = b; c <= 4; ++c) {
        const std::vector<std::int64_t> xs{a, b, c};
        const bool split = oracle::has_equal_bipartition(xs);
        EXPECT_EQ(aef::brute_force_aef(aef::gen_from_partition(xs).instance).has_value(), split)
            << a << "," << b << "," << c;
      }
    }
  }
}

TEST(EfEmbedding, Shape) {
  const auto gadget = aef::gen_ef_embedding(Instance::from_rows({{1, 0}, {0, 1}}));
  EXPECT_EQ(gadget.instance.items(), 4u);
  EXPECT_EQ(gadget.quota, Quota::exact(2, 2));
  EXPECT_EQ(gadget.instance.item_labels()[2], "d1");
  const auto fair = aef::brute_force_aef(gadget.instance, gadget.quota);
  ASSERT_TRUE(fair);
  EXPECT_TRUE(aef::is_aef1(gadget.instance, *fair).fair);
  EXPECT_THROW(aef::gen_ef_embedding(Instance::from_rows({{2}})), aef::InputError);
}

// Agent 0 takes both original items: agent 1 removes the one it values from
// agent 0's bundle and compares 0 with 0, so the pair passes AEF-1 without
// the allocation being AEF.
TEST(EfEmbedding, Aef1AllocationNeedNotBeAef) {
  const auto gadget = aef::gen_ef_embedding(Instance::from_rows({{1, 0}, {0, 1}}));
  const Allocation a({0, 0, 1, 1});
  EXPECT_TRUE(aef::is_aef1(gadget.instance, a).fair);
  EXPECT_FALSE(aef::is_aef(gadget.instance, a).fair);
  EXPECT_EQ(aef::brute_force_aef1(gadget.instance, gadget.quota), a);
}

TEST(EfEmbedding, ThreeContestedItemsHaveNoAef1) {
  const Instance inst = Instance::from_rows({{1, 1, 1}, {1, 1, 1}});
  EXPECT_FALSE(oracle::exists(inst, std::nullopt, [&](const Allocation& a) {
    return oracle::ef(inst, a);
  }));
  const auto gadget = aef::gen_ef_embedding(inst);
  EXPECT_FALSE(aef::brute_force_aef1(gadget.instance, gadget.quota));
}

// A single item both agents want: no EF allocation, yet the embedding has an
// AEF-1 allocation because the agent holding the dummy may remove the other
// agent's only item and compare 0 with 0.
TEST(EfEmbedding, SingleContestedItemStillAdmitsAef1) {
  const Instance inst = Instance::from_rows({{1}, {1}});
  EXPECT_FALSE(oracle::exists(inst, std::nullopt, [&](const Allocation& a) {
    return oracle::ef(inst, a);
  }));
  const auto gadget = aef::gen_ef_embedding(inst);
  const auto found = aef::brute_force_aef1(gadget.instance, gadget.quota);
  ASSERT_TRUE(found);
  EXPECT_FALSE(aef::is_aef(gadget.instance, *found).fair);
}

TEST(EqcardGadget, Values) {
  const std::vector<std::int64_t> ones(8, 1);
  const auto gadget = aef::gen_from_eqcard_partition(ones);
  const Instance& inst = gadget.instance;
  EXPECT_EQ(inst.items(), 18u);
  EXPECT_EQ(gadget.info.k, 4u);
  EXPECT_EQ(gadget.info.target, Rational(4));
  EXPECT_EQ(gadget.info.shifted_target, std::optional<Rational>(Rational(1028)));
  EXPECT_EQ(gadget.quota, Quota::exact(3, 6));
  EXPECT_EQ(inst.value(0, 0), Rational(257));
  EXPECT_EQ(inst.value(2, 8), Rational(6168, 25));
  EXPECT_EQ(inst.value(1, 17), Rational(0));
  EXPECT_LT(inst.value(0, 8), inst.value(0, 0));
  EXPECT_THROW(aef::gen_from_eqcard_partition(std::vector<std::int64_t>{1, 2, 3}), aef::InputError);
  EXPECT_THROW(aef::gen_from_eqcard_partition(ones, 2), aef::InputError);
}

TEST(EqcardGadget, PaddingAgents) {
  const std::vector<std::int64_t> xs{1, 1, 2, 2};
  const auto gadget = aef::gen_from_eqcard_partition(xs, 4);
  EXPECT_EQ(gadget.instance.agents(), 4u);
  ASSERT_TRUE(gadget.quota);
  EXPECT_EQ(gadget.quota->upper[3], 0u);
  for (std::size_t g = 0; g < gadget.instance.items(); ++g) {
    EXPECT_TRUE(gadget.instance.value(3, g).is_zero());
  }
}

TEST(EqcardGadget, EquivalenceOnSmallPools) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t b = a; b <= 3; ++b) {
      for (std::int64_t c = b; c <= 3; ++c) {
        for (std::int64_t d = c; d <= 3; ++d) {
          const std::vector<std::int64_t> xs{a, b, c, d};
          bool expected = false;
          for (unsigned mask = 0; mask < 16; ++mask) {
            if (std::popcount(mask) != 2) continue;
            std::int64_t in = 0;
            for (int j = 0; j < 4; ++j) in += (mask >> j & 1) ? xs[j] : 0;
            expected = expected || 2 * in == a + b + c + d;
          }
          const auto gadget = aef::gen_from_eqcard_partition(xs);
          const auto found = aef::brute_force_aef1(gadget.instance, gadget.quota);
          EXPECT_EQ(found.has_value(), expected) << a << b << c << d;
        }
      }
    }
  }
}

TEST(ValueModels, ParseAndPrint) {
  for (const std::string text : {"binary(1/2)", "uniform_int(0,9)", "uniform_rational(12)"}) {
    EXPECT_EQ(aef::to_string(aef::parse_value_model(text)), text);
  }
  EXPECT_THROW(aef::parse_value_model("gaussian(1)"), aef::InputError);
  EXPECT_THROW(aef::parse_value_model("binary(3/2)"), aef::InputError);
  EXPECT_THROW(aef::parse_value_model("uniform_int(5,1)"), aef::InputError);
}

TEST(RandomInstances, DeterministicAndInRange) {
  const auto ones = aef::gen_random(2, 3, aef::BinaryModel{1}, 4);
  for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(ones.value(1, g), Rational(1));
  EXPECT_EQ(aef::gen_random(3, 6, aef::UniformIntModel{0, 9}, 42),
            aef::gen_random(3, 6, aef::UniformIntModel{0, 9}, 42));
  const Instance inst = aef::gen_random(3, 6, aef::UniformIntModel{0, 9}, 42);
  EXPECT_TRUE(aef::brute_force_aef1(inst));
  const Instance rat = aef::gen_random(4, 8, aef::UniformRationalModel{12}, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t g = 0; g < 8; ++g) {
      EXPECT_GE(rat.value(i, g), Rational(0));
      EXPECT_LE(rat.value(i, g), Rational(1));
      EXPECT_LE(rat.value(i, g).denominator(), 12);
    }
  }
}

TEST(RandomInstances, FeasibleQuota) {
  aef::Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + aef::draw_below(rng, 4);
    const std::size_t m = aef::draw_below(rng, 9);
    const Quota q = aef::random_feasible_quota(n, m, rng);
    ASSERT_EQ(q.agents(), n);
    ASSERT_TRUE(q.admits(m));
  }
}

TEST(RandomInstances, DrawBelowIsUnbiasedEnough) {
  aef::Rng rng(1);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[aef::draw_below(rng, 3)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

}  // namespace
