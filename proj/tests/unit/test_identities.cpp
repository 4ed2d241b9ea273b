#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "areawalk/identities.hpp"
#include "support/oracles.hpp"

namespace areawalk {
namespace {

using testing::all_compositions;
using testing::box_multi_sum;
using testing::small_binomial;

TEST(ChuVandermonde, Examples) {
  EXPECT_TRUE(chu_vandermonde(2, 2, 1, 1));
  EXPECT_TRUE(chu_vandermonde(6, 3, 4, 2));
  for (int k = 0; k <= 8; ++k) {
    for (int j = 0; j <= k; ++j) EXPECT_TRUE(chu_vandermonde(0, k, 0, j));
  }
  EXPECT_THROW(chu_vandermonde(31, 1, 0, 0), InvalidArgument);
  EXPECT_THROW(chu_vandermonde(1, 1, -1, 0), InvalidArgument);
}

TEST(ChuVandermonde, RandomTuples) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 30);
  for (int i = 0; i < 500; ++i) {
    const int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
    EXPECT_TRUE(chu_vandermonde(a, b, c, d)) << a << ' ' << b << ' ' << c << ' ' << d;
  }
}

TEST(MultiBinomial, Examples) {
  const std::vector<int> ones{1, 1, 1};
  const IdentityCheck c3 = multi_binomial_identity_doubled(ones);
  EXPECT_TRUE(c3.holds);
  EXPECT_EQ(c3.lhs, 20);
  EXPECT_EQ(c3.rhs, 20);

  const std::vector<int> four{2, 1, 1, 2};
  const IdentityCheck c4 = multi_binomial_identity_doubled(four);
  EXPECT_TRUE(c4.holds);
  EXPECT_EQ(c4.rhs, 924);

  for (int h = 0; h <= 6; ++h) {
    const std::vector<int> single{h};
    const IdentityCheck c1 = multi_binomial_identity_doubled(single);
    EXPECT_TRUE(c1.holds);
    EXPECT_EQ(c1.rhs, small_binomial(2 * h, h));
  }
}

TEST(MultiBinomial, AllSmallCompositionsDoubled) {
  for (int h = 1; h <= 6; ++h) {
    for (const auto& parts : all_compositions(h)) {
      if (parts.size() > 5) continue;
      const IdentityCheck c = multi_binomial_identity_doubled(parts);
      EXPECT_TRUE(c.holds) << "h=" << h << " size=" << parts.size() << " rhs=" << c.rhs;
      EXPECT_EQ(c.lhs, small_binomial(2 * h, h));
    }
  }
}

TEST(MultiBinomial, GeneralLowerArguments) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int j = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<int> upper, lower;
    for (int i = 0; i < j; ++i) {
      upper.push_back(std::uniform_int_distribution<int>(0, 6)(rng));
      lower.push_back(std::uniform_int_distribution<int>(0, upper.back())(rng));
    }
    const IdentityCheck c = multi_binomial_identity(upper, lower);
    EXPECT_TRUE(c.holds) << "trial " << trial;
  }
}

TEST(MultiBinomial, WindowsMatchWideBox) {
  // A box of radius 2 * sum(upper) is far wider than any support; the
  // window enumeration must see exactly the same terms.
  const std::vector<std::vector<int>> cases{{1, 1, 1}, {2, 1, 1}, {1, 2, 1, 1}, {1, 1, 1, 1}};
  for (const auto& parts : cases) {
    std::vector<int> upper;
    for (int l : parts) upper.push_back(2 * l);
    const int radius = 2 * std::accumulate(upper.begin(), upper.end(), 0);
    EXPECT_EQ(multi_binomial_identity(upper, parts).rhs, box_multi_sum(upper, parts, radius));
  }
}

TEST(MultiBinomial, NarrowBoxIsNotEnough) {
  // Radius sum(upper) misses terms for five unit blocks; radius 2 sum(upper) does not.
  const std::vector<int> parts{1, 1, 1, 1, 1};
  const std::vector<int> upper{2, 2, 2, 2, 2};
  EXPECT_EQ(box_multi_sum(upper, parts, 10), 248);
  EXPECT_EQ(box_multi_sum(upper, parts, 20), 252);
  EXPECT_EQ(multi_binomial_identity(upper, parts).rhs, 252);
}

TEST(MultiBinomial, Preconditions) {
  const std::vector<int> six(6, 1);
  EXPECT_THROW(multi_binomial_identity_doubled(six), InvalidArgument);
  const std::vector<int> a{1, 2};
  const std::vector<int> b{1};
  EXPECT_THROW(multi_binomial_identity(a, b), InvalidArgument);
  const std::vector<int> big{7};
  EXPECT_THROW(multi_binomial_identity_doubled(big), InvalidArgument);
}

TEST(PairedSum, Examples) {
  const PairedSumCheck a = paired_sum_identity(1, 1, 1, RationalFlux(1, 13));
  EXPECT_TRUE(a.holds());
  EXPECT_EQ(a.exact_lhs, small_binomial(6, 3) + 2 * small_binomial(4, 2));
  EXPECT_TRUE(paired_sum_identity(2, 1, 1, RationalFlux(1, 17)).holds());

  // l2 = 0: the middle factor is 1 and both halves reduce to the two-block case.
  const PairedSumCheck c = paired_sum_identity(1, 0, 1, RationalFlux(2, 7));
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.exact_lhs, 2 * small_binomial(4, 2));
  EXPECT_THROW(paired_sum_identity(1, 1, 1, RationalFlux(1, 6)), InvalidArgument);
}

TEST(PairedSum, SmallGrid) {
  for (int l1 = 0; l1 <= 3; ++l1) {
    for (int l2 = 0; l2 <= 3; ++l2) {
      for (int l3 = 0; l3 <= 3; ++l3) {
        const long q = 2L * (l1 + l2 + l3) + 1;
        for (long p = 1; p < q; p += 2) {
          if (std::gcd(p, q) != 1) continue;
          const PairedSumCheck r = paired_sum_identity(l1, l2, l3, RationalFlux(p, q));
          EXPECT_TRUE(r.numeric_holds) << l1 << l2 << l3 << ' ' << p << '/' << q;
          EXPECT_TRUE(r.exact_holds) << l1 << l2 << l3;
        }
      }
    }
  }
}

}  // namespace
}  // namespace areawalk
