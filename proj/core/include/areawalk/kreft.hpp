#pragma once

#include <span>
#include <utility>

#include "areawalk/cosine_polynomial.hpp"
#include "areawalk/exact.hpp"

namespace areawalk {

// Kreft coefficients a_{p,q}(2j) of the Hofstadter secular polynomial.
//
// Floating point is confined to the 4 sin^2 building blocks and the sums
// built from them; every combinatorial weight (a_{1,1}, multinomials,
// cosine-expansion coefficients) is exact and converted at the last step.

/// 4 sin^2(pi k p / q). Periodic in k with period q, in [0, 4].
double b_tilde(const RationalFlux& flux, long k);

/// The j-fold nested sum
///   (-1)^{j+1} sum_{k_1=0}^{q-2j} sum_{k_2=0}^{k_1} ... sum_{k_j=0}^{k_{j-1}}
///     prod_{i=1}^{j} b(k_i + 2j - 2i + 1),
/// evaluated with prefix sums in O(j q). Requires q >= 2j, j >= 1.
double kreft_direct(const RationalFlux& flux, int j);

/// The published closed forms of a_{p,q}(2j) for j = 1..4 as exact
/// polynomials in q with cosine coefficients.
QCosinePolynomial kreft_closed_form(int j);

/// (1/q) sum_{k=1}^{q} b(k)^j. Equals binom(2j, j) whenever q > j.
double power_sum(int j, const RationalFlux& flux);

struct ShiftedSumCheck {
  double numeric = 0;    // (1/q) sum_k prod_i b^{l_i}(k - (i-1) r)
  double expansion = 0;  // stride-1 cosine expansion with A -> r A
  bool holds = false;    // agreement within 1e-9 relative
};

/// Compares the stride-r block product average with the dilated stride-1
/// cosine expansion. Requires q > sum l_i, r >= 1, parts >= 0, non-empty.
ShiftedSumCheck shifted_product_sum(const RationalFlux& flux, std::span<const int> exponents, int r);

/// a_{1,1}(2j) = - sum_{m: sum i m_i = j} prod_i (1/m_i!) (-binom(2i,i)^2/(2i))^{m_i}.
/// j >= 1; j = 0 gives the convention a(0) = -1.
BigRatio a11(int j);

/// Kreft coefficient continued to q < 2j: zero for j+1 <= q <= 2j-1, and
/// for 1 <= q <= j the weighted sum over k >= 0 and multiplicity vectors
/// (m_1..m_{q/2}) with sum i m_i = j - q(k+1) of
///   a_{1,1}(2(k+1)) multinomial(m_1..m_{q/2}, 2k) prod_i a_{p,q}(2i)^{m_i}.
/// Throws InvalidArgument("use kreft_direct") if q >= 2j.
double kreft_extrapolated(const RationalFlux& flux, int j);

/// a_{p,q}(2j) for any j >= 0: -1 at j = 0, kreft_direct when q >= 2j,
/// kreft_extrapolated otherwise.
double kreft_coefficient(const RationalFlux& flux, int j);

/// a_{p,q}(2j) = sum_{k >= 0, j - qk >= 0} a_{1,1}(2k) [z^{2j-2qk}] b(z)^{1-2k}
/// with the Kreft polynomial b(z) = -sum_{i=0}^{q/2} a_{p,q}(2i) z^{2i}.
double kreft_series(const RationalFlux& flux, int j);

struct FirstOrderLink {
  double from_areas = 0;        // (1/n) Re sum_A C_n(A) e^{2 i pi A p/q}
  double from_first_order = 0;  // [q] a_{p,q}(n) from the composition sum
};

/// Both sides of the first-order relation. n even, n >= 4.
FirstOrderLink first_order_link(int n, const RationalFlux& flux);

/// a_{p,q}(n) rebuilt from the first-order slices:
///   - sum_{k: sum_j j k_j = n/2} prod_j (-1)^{k_j} / k_j! (q [q]a_{p,q}(2j))^{k_j}.
/// n even, 2 <= n <= 12.
double q_expansion_reconstruct(int n, const RationalFlux& flux);

/// The three-term rewrite of a_{p,q}(4):
///   -(1/2)((sum b)^2 - sum b^2) + sum b(k) b(k-1), sums over k = 1..q.
double kreft4_decomposition(const RationalFlux& flux);

}  // namespace areawalk
