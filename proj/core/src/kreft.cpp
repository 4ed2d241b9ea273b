#include "areawalk/kreft.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "areawalk/area_enum.hpp"
#include "areawalk/combinatorics.hpp"

namespace areawalk {

namespace {

using Real = long double;

Real b_tilde_ld(const RationalFlux& flux, long k) {
  const long q = flux.q();
  long r = (k % q) * (flux.p() % q) % q;
  if (r < 0) r += q;
  const Real s = std::sin(std::numbers::pi_v<Real> * static_cast<Real>(r) / static_cast<Real>(q));
  return 4 * s * s;
}

Real to_real(const BigCount& v) { return v.convert_to<Real>(); }
Real to_real(const BigRatio& v) { return v.convert_to<Real>(); }

}  // namespace

double b_tilde(const RationalFlux& flux, long k) { return static_cast<double>(b_tilde_ld(flux, k)); }

double kreft_direct(const RationalFlux& flux, int j) {
  if (j < 1) throw InvalidArgument("kreft_direct requires j >= 1");
  const long q = flux.q();
  if (q < 2L * j) throw InvalidArgument("direct form undefined; use kreft_extrapolated");

  // level[k] holds the partial nested sum with the outermost free index = k.
  const auto span = static_cast<std::size_t>(q - 2L * j + 1);
  std::vector<Real> level(span);
  for (std::size_t k = 0; k < span; ++k) level[k] = b_tilde_ld(flux, static_cast<long>(k) + 1);
  for (int i = j - 1; i >= 1; --i) {
    Real prefix = 0;
    const long offset = 2L * j - 2L * i + 1;
    for (std::size_t k = 0; k < span; ++k) {
      prefix += level[k];
      level[k] = b_tilde_ld(flux, static_cast<long>(k) + offset) * prefix;
    }
  }
  Real total = 0;
  for (Real v : level) total += v;
  return static_cast<double>((j % 2 == 1) ? total : -total);
}

QCosinePolynomial kreft_closed_form(int j) {
  using M = QCosinePolynomial::Map;
  switch (j) {
    case 1:
      return QCosinePolynomial(M{{{1, 0}, 2}});
    case 2:
      return QCosinePolynomial(M{{{1, 0}, 7}, {{1, 1}, 2}, {{2, 0}, -2}});
    case 3: {
      // (2/3) q (58 + 36 c1 + 6 c2 - q (21 + 6 c1) + 2 q^2)
      const BigRatio f(2, 3);
      return QCosinePolynomial(M{{{1, 0}, f * 58},
                                 {{1, 1}, f * 36},
                                 {{1, 2}, f * 6},
                                 {{2, 0}, f * -21},
                                 {{2, 1}, f * -6},
                                 {{3, 0}, f * 2}});
    }
    case 4: {
      // (1/6) q (1617 + 1512 c1 + 462 c2 + 72 c3 + 12 c4
      //          + q (-617 - 372 c1 - 54 c2) + q^2 (84 + 24 c1) - 4 q^3)
      const BigRatio f(1, 6);
      return QCosinePolynomial(M{{{1, 0}, f * 1617},
                                 {{1, 1}, f * 1512},
                                 {{1, 2}, f * 462},
                                 {{1, 3}, f * 72},
                                 {{1, 4}, f * 12},
                                 {{2, 0}, f * -617},
                                 {{2, 1}, f * -372},
                                 {{2, 2}, f * -54},
                                 {{3, 0}, f * 84},
                                 {{3, 1}, f * 24},
                                 {{4, 0}, f * -4}});
    }
    default:
      throw InvalidArgument("no closed form for j > 4");
  }
}

double power_sum(int j, const RationalFlux& flux) {
  if (j < 0) throw InvalidArgument("power_sum requires j >= 0");
  Real s = 0;
  for (long k = 1; k <= flux.q(); ++k) s += std::pow(b_tilde_ld(flux, k), j);
  return static_cast<double>(s / static_cast<Real>(flux.q()));
}

ShiftedSumCheck shifted_product_sum(const RationalFlux& flux, std::span<const int> exponents, int r) {
  if (r < 1) throw InvalidArgument("stride must be >= 1");
  if (exponents.empty()) throw InvalidArgument("empty exponent list");
  long total = 0;
  for (int l : exponents) {
    if (l < 0) throw InvalidArgument("exponents must be >= 0");
    total += l;
  }
  if (flux.q() <= total) throw InvalidArgument("shifted_product_sum requires q > sum of exponents");

  Real numeric = 0;
  for (long k = 1; k <= flux.q(); ++k) {
    Real term = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      term *= std::pow(b_tilde_ld(flux, k - static_cast<long>(i) * r), exponents[i]);
    }
    numeric += term;
  }
  numeric /= static_cast<Real>(flux.q());

  CosinePolynomial expansion;
  for (const auto& [area, v] : block_product_expansion(exponents)) expansion.add(std::abs(area), BigRatio(v));

  ShiftedSumCheck out;
  out.numeric = static_cast<double>(numeric);
  out.expansion = expansion.dilated(r).evaluate(flux);
  out.holds = relative_deviation(out.numeric, out.expansion) <= kRelativeTolerance;
  return out;
}

BigRatio a11(int j) {
  if (j < 0) throw InvalidArgument("a11 requires j >= 0");
  if (j == 0) return -1;
  std::vector<BigRatio> base;
  for (int i = 1; i <= j; ++i) {
    const BigCount c = binomial(2 * i, i);
    base.emplace_back(-c * c, 2 * i);
  }
  BigRatio sum = 0;
  for_each_multiplicity_vector(j, j, [&](std::span<const int> mult) {
    BigRatio term = 1;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      for (int e = 0; e < mult[i]; ++e) term *= base[i];
      term /= factorial(mult[i]);
    }
    sum += term;
  });
  return -sum;
}

double kreft_extrapolated(const RationalFlux& flux, int j) {
  if (j < 1) throw InvalidArgument("kreft_extrapolated requires j >= 1");
  const long q = flux.q();
  if (q >= 2L * j) throw InvalidArgument("use kreft_direct");
  if (q >= j + 1) return 0.0;

  const int half = static_cast<int>(q / 2);
  std::vector<Real> base;
  for (int i = 1; i <= half; ++i) base.push_back(kreft_direct(flux, i));

  Real sum = 0;
  for (int k = 0; j - q * (k + 1) >= 0; ++k) {
    const Real lead = to_real(a11(k + 1));
    const int target = static_cast<int>(j - q * (k + 1));
    for_each_multiplicity_vector(target, half, [&](std::span<const int> mult) {
      std::vector<int> slots(mult.begin(), mult.end());
      slots.push_back(2 * k);
      Real term = lead * to_real(multinomial(slots));
      for (std::size_t i = 0; i < mult.size(); ++i) term *= std::pow(base[i], mult[i]);
      sum += term;
    });
  }
  return static_cast<double>(sum);
}

double kreft_coefficient(const RationalFlux& flux, int j) {
  if (j < 0) throw InvalidArgument("Kreft index must be >= 0");
  if (j == 0) return -1.0;
  return flux.q() >= 2L * j ? kreft_direct(flux, j) : kreft_extrapolated(flux, j);
}

namespace {

using Series = std::vector<Real>;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; i + k < out.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

// 1/b truncated to b.size() terms; b[0] must be 1.
Series series_inverse(const Series& b) {
  Series inv(b.size(), 0);
  inv[0] = 1;
  for (std::size_t m = 1; m < b.size(); ++m) {
    Real s = 0;
    for (std::size_t i = 1; i <= m; ++i) s += b[i] * inv[m - i];
    inv[m] = -s;
  }
  return inv;
}

}  // namespace

double kreft_series(const RationalFlux& flux, int j) {
  if (j < 0) throw InvalidArgument("kreft_series requires j >= 0");
  if (j == 0) return -1.0;
  const long q = flux.q();
  const auto order = static_cast<std::size_t>(2 * j + 1);

  Series b(order, 0);
  b[0] = 1;  // -a(0)
  for (long i = 1; i <= q / 2 && 2 * i <= 2L * j; ++i) {
    b[static_cast<std::size_t>(2 * i)] = -kreft_direct(flux, static_cast<int>(i));
  }
  const Series inv = series_inverse(b);

  Real sum = 0;
  Series power = inv;  // b^{-1}, advanced to b^{-(2k-1)}
  for (long k = 0; j - q * k >= 0; ++k) {
    const auto idx = static_cast<std::size_t>(2L * j - 2L * q * k);
    if (k == 0) {
      sum += -b[idx];  // a_{1,1}(0) = -1, b^{+1}
      continue;
    }
    if (k > 1) power = series_mul(series_mul(power, inv), inv);
    sum += to_real(a11(static_cast<int>(k))) * power[idx];
  }
  return static_cast<double>(sum);
}

FirstOrderLink first_order_link(int n, const RationalFlux& flux) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("first_order_link requires even n >= 4");
  FirstOrderLink out;
  out.from_areas = evaluate_at_flux(enumerate_areas(n), flux).real() / n;
  out.from_first_order = first_order_q(n).evaluate(flux);
  return out;
}

double q_expansion_reconstruct(int n, const RationalFlux& flux) {
  if (n < 2 || n % 2 != 0 || n > 12) throw InvalidArgument("q_expansion_reconstruct requires even n in [2, 12]");
  const int h = n / 2;
  const auto q = static_cast<Real>(flux.q());
  std::vector<Real> scaled;  // q [q]a(2i)
  for (int i = 1; i <= h; ++i) scaled.push_back(q * static_cast<Real>(first_order_q(2 * i).evaluate(flux)));

  Real sum = 0;
  for_each_multiplicity_vector(h, h, [&](std::span<const int> mult) {
    Real term = 1;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      term *= std::pow(-scaled[i], mult[i]) / to_real(factorial(mult[i]));
    }
    sum += term;
  });
  return static_cast<double>(-sum);
}

double kreft4_decomposition(const RationalFlux& flux) {
  Real s1 = 0;
  Real s2 = 0;
  Real shifted = 0;
  for (long k = 1; k <= flux.q(); ++k) {
    const Real b = b_tilde_ld(flux, k);
    s1 += b;
    s2 += b * b;
    shifted += b * b_tilde_ld(flux, k - 1);
  }
  return static_cast<double>(-(s1 * s1 - s2) / 2 + shifted);
}

}  // namespace areawalk
