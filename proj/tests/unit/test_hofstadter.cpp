#include <numeric>

#include <gtest/gtest.h>

#include "areawalk/area_enum.hpp"
#include "areawalk/hofstadter.hpp"

namespace areawalk {
namespace {

constexpr double kTol = 1e-9;

TEST(Trace, Examples) {
  EXPECT_NEAR(trace_formula(4, RationalFlux(0, 1)), 36, 1e-12);
  EXPECT_NEAR(trace_formula(4, RationalFlux(1, 2)), 20, 1e-12);
  for (long q = 1; q <= 9; ++q) {
    EXPECT_NEAR(trace_formula(2, RationalFlux(1 % q == 0 ? 0 : 1, q)), 4, 1e-12);
  }
  EXPECT_LE(relative_deviation(trace_partition(4, RationalFlux(1, 3)), trace_formula(4, RationalFlux(1, 3))), kTol);
  EXPECT_LE(relative_deviation(trace_partition(6, RationalFlux(1, 2)), trace_formula(6, RationalFlux(1, 2))), kTol);
  EXPECT_NEAR(trace_partition(2, RationalFlux(1, 5)), 4, 1e-12);
  EXPECT_NEAR(trace_matrix(2, RationalFlux(1, 3)), 4, 1e-12);
  EXPECT_NEAR(trace_matrix(4, RationalFlux(0, 1)), 36, 1e-12);
  EXPECT_LE(relative_deviation(trace_matrix(6, RationalFlux(1, 4)),
                               evaluate_at_flux(enumerate_areas(6), RationalFlux(1, 4)).real()),
            kTol);
}

TEST(Trace, RejectsOddOrder) {
  EXPECT_THROW(trace_formula(3, RationalFlux(1, 3)), InvalidArgument);
  EXPECT_THROW(trace_partition(0, RationalFlux(1, 3)), InvalidArgument);
  EXPECT_THROW(trace_matrix(5, RationalFlux(1, 3)), InvalidArgument);
  EXPECT_THROW(trace_matrix(4, RationalFlux(1, 17)), InvalidArgument);
}

TEST(MomentIdentity, Examples) {
  const MomentReport r4 = verify_moment_identity(4, RationalFlux(1, 2));
  EXPECT_TRUE(r4.passed);
  for (double v : {r4.from_areas, r4.formula, r4.partition, r4.matrix, r4.first_order}) EXPECT_NEAR(v, 20, 1e-9);

  const MomentReport r2 = verify_moment_identity(2, RationalFlux(1, 7));
  EXPECT_TRUE(r2.passed);
  EXPECT_NEAR(r2.matrix, 4, 1e-12);

  EXPECT_TRUE(verify_moment_identity(8, RationalFlux(1, 3)).passed);
}

TEST(MomentIdentity, FullGrid) {
  for (int n = 2; n <= 12; n += 2) {
    for (long q = 1; q <= 8; ++q) {
      for (long p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const MomentReport r = verify_moment_identity(n, RationalFlux(p, q));
        EXPECT_TRUE(r.passed) << "n=" << n << " p/q=" << p << '/' << q << " dev=" << r.max_deviation;
      }
    }
  }
}

TEST(BrillouinMoment, RealOddAndGaugeInvariant) {
  for (long q = 1; q <= 8; ++q) {
    for (long p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const RationalFlux f(p, q);
      for (int n = 1; n <= 11; n += 2) EXPECT_LE(std::abs(brillouin_moment(n, f)), kTol) << n;
      for (int n = 2; n <= 12; n += 2) {
        const auto base = brillouin_moment(n, f);
        EXPECT_LE(std::abs(base.imag()), kTol * std::max(1.0, std::abs(base.real())));
        for (double shift : {0.3, 1.7, -2.2}) {
          EXPECT_LE(relative_deviation(brillouin_moment(n, f, shift).real(), base.real()), kTol);
        }
      }
    }
  }
  EXPECT_NEAR(brillouin_moment(0, RationalFlux(1, 5)).real(), 1.0, 1e-12);
}

}  // namespace
}  // namespace areawalk
