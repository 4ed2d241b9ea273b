#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "areawalk/cosine_polynomial.hpp"

namespace areawalk {
namespace {

TEST(RationalFlux, Validation) {
  EXPECT_NO_THROW(RationalFlux(0, 1));
  EXPECT_NO_THROW(RationalFlux(3, 7));
  EXPECT_THROW(RationalFlux(2, 4), InvalidArgument);
  EXPECT_THROW(RationalFlux(0, 2), InvalidArgument);
  EXPECT_THROW(RationalFlux(1, 0), InvalidArgument);
  EXPECT_THROW(RationalFlux(-1, 3), InvalidArgument);
  EXPECT_EQ(RationalFlux(1, 3).str(), "1/3");
}

TEST(RationalFlux, Harmonics) {
  const RationalFlux f(1, 3);
  EXPECT_NEAR(f.angle(), 2 * std::numbers::pi / 3, 1e-15);
  EXPECT_NEAR(f.cos_harmonic(1), -0.5, 1e-15);
  EXPECT_NEAR(f.cos_harmonic(3), 1.0, 1e-15);
  EXPECT_NEAR(f.cos_harmonic(-2), -0.5, 1e-15);
  EXPECT_NEAR(f.cos_harmonic(3000001), -0.5, 1e-12);
  EXPECT_NEAR(f.sin_harmonic(1), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(f.sin_harmonic(-1), -std::sqrt(3.0) / 2, 1e-15);
}

TEST(CosinePolynomial, Arithmetic) {
  CosinePolynomial a(CosinePolynomial::Map{{0, 3}, {1, 1}});
  const CosinePolynomial b(CosinePolynomial::Map{{1, -1}, {2, BigRatio(1, 2)}});
  a += b;
  EXPECT_EQ(a.at(1), 0);
  EXPECT_EQ(a.coefficients().count(1), 0U);
  EXPECT_EQ(a.degree(), 2);
  a *= 4;
  EXPECT_EQ(a.at(0), 12);
  EXPECT_EQ(a.at(2), 2);
  EXPECT_EQ(a.sum(), 14);
  EXPECT_NEAR(a.evaluate(RationalFlux(1, 4)), 12 + 2 * std::cos(std::numbers::pi), 1e-12);
}

TEST(CosinePolynomial, Dilation) {
  const CosinePolynomial p(CosinePolynomial::Map{{0, 4}, {1, 2}});
  const CosinePolynomial d = p.dilated(3);
  EXPECT_EQ(d.at(0), 4);
  EXPECT_EQ(d.at(3), 2);
  EXPECT_EQ(d.at(1), 0);
  EXPECT_THROW(p.dilated(0), InvalidArgument);
}

TEST(QCosinePolynomial, SliceAndEvaluate) {
  // q (7 + 2 cos) - 2 q^2
  const QCosinePolynomial a4(QCosinePolynomial::Map{{{1, 0}, 7}, {{1, 1}, 2}, {{2, 0}, -2}});
  EXPECT_EQ(a4.q_degree(), 2);
  EXPECT_EQ(a4.slice(1), CosinePolynomial(CosinePolynomial::Map{{0, 7}, {1, 2}}));
  EXPECT_EQ(a4.at(2, 0), -2);
  EXPECT_NEAR(a4.evaluate(RationalFlux(1, 4)), -4.0, 1e-12);
  EXPECT_NEAR(a4.evaluate(RationalFlux(1, 1)), 7.0, 1e-12);
}

}  // namespace
}  // namespace areawalk
