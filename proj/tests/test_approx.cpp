#include <gtest/gtest.h>

#include <set>

#include "aef/error.hpp"
#include "aef/fairness.hpp"
#include "aef/reductions.hpp"
#include "aef/removing_matrix.hpp"
#include "aef/rounding.hpp"
#include "aef/solvers.hpp"
#include "oracles.hpp"

namespace {

using aef::Allocation;
using aef::Instance;
using aef::Quota;
using aef::Rational;
using aef::RemovalEntry;
using aef::RemovingMatrix;

// Independent count: brute-force every assignment of options to pairs.
std::size_t count_valid_matrices(std::size_t n, std::size_t m) {
  const std::size_t pairs = n * (n - 1);
  const std::size_t options = 2 * m + 1;
  std::size_t total = 0;
  std::vector<std::size_t> choice(pairs, 0);
  while (true) {
    std::vector<std::set<std::size_t>> holders(m);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t h = 0; h < n; ++h) {
        if (i == h) continue;
        if (choice[p] > 0) {
          const std::size_t g = (choice[p] - 1) / 2;
          holders[g].insert((choice[p] - 1) % 2 == 0 ? i : h);
        }
        ++p;
      }
    }
    bool ok = true;
    for (const auto& s : holders) ok = ok && s.size() <= 1;
    total += ok ? 1 : 0;
    std::size_t pos = pairs;
    while (pos > 0 && ++choice[pos - 1] == options) choice[--pos] = 0;
    if (pos == 0) return total;
  }
}

TEST(RemovingMatrix, CountsAndOrder) {
  EXPECT_EQ(aef::for_each_removing_matrix(2, 1, [](const RemovingMatrix&) { return true; }), 7u);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t m = 0; m <= (n == 2 ? 4u : 2u); ++m) {
      std::size_t index = 0;
      const std::size_t visited = aef::for_each_removing_matrix(n, m, [&](const RemovingMatrix& r) {
        EXPECT_TRUE(r.is_valid());
        if (index++ == 0) {
          EXPECT_EQ(r, RemovingMatrix(n, m));
        }
        for (std::size_t i = 0; i < n; ++i) {
          const auto flags = r.removing_items(i);
          EXPECT_LE(static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true)), n - 1);
        }
        return true;
      });
      EXPECT_EQ(visited, count_valid_matrices(n, m)) << "n=" << n << " m=" << m;
    }
  }
}

TEST(RemovingMatrix, EarlyStopAndValidation) {
  EXPECT_EQ(aef::for_each_removing_matrix(2, 3, [](const RemovingMatrix&) { return false; }), 1u);
  EXPECT_THROW(aef::for_each_removing_matrix(1, 3, [](const RemovingMatrix&) { return true; }),
               aef::InputError);
  RemovingMatrix r(2, 2);
  EXPECT_THROW(r.set(0, 0, RemovalEntry{0, 0}), aef::InputError);
  EXPECT_THROW(r.set(0, 1, RemovalEntry{0, 2}), aef::InputError);
  EXPECT_THROW(r.set(0, 1, RemovalEntry{5, 0}), aef::InputError);
  r.set(0, 1, RemovalEntry{0, 1});
  r.set(1, 0, RemovalEntry{0, 0});
  EXPECT_FALSE(r.is_valid());
  r.set(1, 0, RemovalEntry{0, 1});
  EXPECT_TRUE(r.is_valid());
  EXPECT_EQ(r.preallocation(), Allocation({1, aef::kUnassigned}));
}

TEST(Rounding, GridExamples) {
  EXPECT_EQ(aef::round_up_to_grid(Rational(2, 5), Rational(1), 36), Rational(15, 36));
  EXPECT_EQ(aef::round_up_to_grid(Rational(0), Rational(1), 36), Rational(0));
  EXPECT_EQ(aef::round_up_to_grid(Rational(1), Rational(1), 36), Rational(1));
  const Instance inst = Instance::from_rows({{1, Rational(2, 5), 0}, {0, 0, 0}});
  const auto profile = aef::round_valuations(inst, RemovingMatrix(2, 3));
  EXPECT_EQ(profile.scale(), 36);
  EXPECT_EQ(profile.value(0, 1), Rational(15, 36));
  EXPECT_EQ(profile.units(0, 1), 15);
  EXPECT_EQ(profile.tolerance(1), Rational(0));
  EXPECT_EQ(profile.value(1, 2), Rational(0));
}

TEST(Rounding, ContractProperty) {
  aef::Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + aef::draw_below(rng, 2);
    const std::size_t m = 1 + aef::draw_below(rng, 4);
    const Instance inst = aef::gen_random(n, m, aef::UniformRationalModel{7}, rng());
    std::size_t k = 0;
    const std::size_t pick = aef::draw_below(rng, 40);
    std::optional<RemovingMatrix> chosen;
    aef::for_each_removing_matrix(n, m, [&](const RemovingMatrix& r) {
      chosen = r;
      return k++ != pick;
    });
    const RemovingMatrix& r = *chosen;
    const auto profile = aef::round_valuations(inst, r);
    for (std::size_t i = 0; i < n; ++i) {
      const auto removing = r.removing_items(i);
      Rational upper(0);
      for (std::size_t g = 0; g < m; ++g) {
        if (!removing[g] && inst.value(i, g) > upper) upper = inst.value(i, g);
      }
      ASSERT_EQ(profile.upper(i), upper);
      const std::int64_t scale = static_cast<std::int64_t>(m * m * n * n);
      for (std::size_t g = 0; g < m; ++g) {
        const Rational& v = inst.value(i, g);
        const Rational& rounded = profile.value(i, g);
        if (removing[g] || upper.is_zero()) {
          ASSERT_EQ(rounded, v);
        } else {
          ASSERT_EQ(rounded, oracle::grid_ceil(v, upper, scale));
        }
      }
    }
  }
}

TEST(Rounding, RejectsMismatchedMatrix) {
  const Instance inst = Instance::from_rows({{1, 1}, {1, 1}});
  EXPECT_THROW(aef::round_valuations(inst, RemovingMatrix(2, 3)), aef::InputError);
  RemovingMatrix bad(2, 2);
  bad.set(0, 1, RemovalEntry{0, 0});
  bad.set(1, 0, RemovalEntry{0, 1});
  EXPECT_THROW(aef::round_valuations(inst, bad), aef::InputError);
}

TEST(ApproximationRatio, Values) {
  EXPECT_EQ(aef::approximation_ratio(2, 5), Rational(3, 5));
  EXPECT_EQ(aef::approximation_ratio(3, 4), Rational(2, 3));
  EXPECT_FALSE(aef::approximation_ratio(2, 2));
  EXPECT_FALSE(aef::approximation_ratio(2, 0));
}

TEST(DpApprox, ZeroValuationsAlwaysFound) {
  const Instance zeros(2, 4, std::vector<Rational>(8, 0));
  const auto result = aef::dp_approx_quota(zeros, Quota::exact({1, 3}));
  ASSERT_TRUE(result.found());
  EXPECT_TRUE(aef::satisfies_quota(*result.allocation, Quota::exact({1, 3})).satisfied);
  EXPECT_EQ(result.matrices_examined, 1u);
}

TEST(DpApprox, SingleAgent) {
  const Instance inst = Instance::from_rows({{1, 2, 3}});
  EXPECT_TRUE(aef::dp_approx_quota(inst, Quota::exact(1, 3)).found());
  EXPECT_FALSE(aef::dp_approx_quota(inst, Quota::exact(1, 2)).found());
}

TEST(DpApprox, MatrixCap) {
  const Instance inst = Instance::from_rows({{1, 1}, {1, 1}});
  aef::ApproxOptions options;
  options.max_matrices = 2;
  EXPECT_THROW(aef::dp_approx_quota(inst, Quota::exact({2, 0}), options), aef::ResourceLimitError);
}

TEST(DpApprox, CompleteAndSoundOnSmallSweep) {
  aef::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + aef::draw_below(rng, 2);
    const std::size_t m = aef::draw_below(rng, n == 2 ? 6 : 4);
    const Instance inst = aef::gen_random(n, m, aef::UniformRationalModel{5}, rng());
    const Quota quota = aef::random_feasible_quota(n, m, rng);
    const bool exists =
        oracle::exists(inst, quota, [&](const Allocation& a) { return oracle::aef1(inst, a); });
    for (const bool free_removal : {false, true}) {
      aef::ApproxOptions options;
      options.free_removal = free_removal;
      const auto result = aef::dp_approx_quota(inst, quota, options);
      if (exists) {
        ASSERT_TRUE(result.found()) << "trial " << trial;
      }
      if (!result.found()) continue;
      ASSERT_TRUE(oracle::quota_ok(*result.allocation, quota));
      if (const auto alpha = aef::approximation_ratio(n, m)) {
        ASSERT_TRUE(oracle::alpha_aef1(inst, *result.allocation, *alpha)) << "trial " << trial;
      }
    }
  }
}

}  // namespace
