#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "areawalk/combinatorics.hpp"
#include "areawalk/cosine_polynomial.hpp"
#include "areawalk/exact.hpp"

namespace areawalk {

/// Exact distribution of closed walks of length n by signed algebraic area.
/// Only non-zero counts are stored.
struct AreaDistribution {
  int n = 0;
  std::map<int, BigCount> counts;

  BigCount at(int area) const;
  BigCount total() const;
  /// Largest |A| with a non-zero count (0 for an empty distribution).
  int max_abs_area() const;
  bool is_symmetric() const;
  /// Adds `value` at `area`, dropping entries that become zero.
  void add(int area, const BigCount& value);

  friend bool operator==(const AreaDistribution&, const AreaDistribution&) = default;
};

/// Z(Q) = sum_A c_A Q^A with integer exponents of either sign.
struct LaurentPolynomial {
  std::map<int, BigCount> coeffs;

  BigCount at(int exponent) const;
  BigCount evaluate_at_one() const;
  std::complex<double> evaluate(std::complex<double> x) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
};

/// Integer weights of the summation variables k_3..k_j inside the j binomial
/// arguments, plus the placement of the +A/-A area shift.
class KWeightMatrix {
 public:
  /// j >= 2 blocks. Throws InvalidArgument otherwise.
  explicit KWeightMatrix(int j);

  int blocks() const noexcept { return j_; }
  /// Weight of k_r in block i (1-based), r in [3, j], i in [1, j].
  int weight(int r, int i) const;
  /// Row of k_r, length j.
  const std::vector<int>& row(int r) const;
  /// +1 for block j-1, -1 for block j, 0 otherwise.
  int area_sign(int i) const;

 private:
  int j_;
  std::vector<std::vector<int>> rows_;  // rows_[r - 3]
};

/// k_{i,j} = -sum_{r=i}^{j} k_r + (i-1) k_{2i-2} + (2i-1) k_{2i-1} + i k_{2i},
/// where only indices in [3, j] contribute. `k` holds k_3..k_j (j-2 entries).
long k_shift(int i, int j, std::span<const long> k);

/// Signed-area coefficients T(A) of (1/q) sum_k prod_i b^{l_i}(k-i+1) in the
/// strict regime, so that the average equals sum_A T(A) e^{2 i pi A p/q}.
///
/// Computed from the finite-bound form: for every k_i in [0, 2 l_i] (i >= 3)
///   binom(2l_1, l_1 + A + S1) binom(2l_2, l_2 - A - S2) prod_{i>=3} binom(2l_i, k_i)
/// with S1 = sum (i-2)(k_i - l_i) and S2 = sum (i-1)(k_i - l_i).
/// Parts may be zero (a zero block is inert). Requires sum of parts <= 33.
std::map<int, std::int64_t> block_product_expansion(std::span<const int> parts);

/// As above with each binom(2l, x) replaced by the polynomial
/// sum_j binom(l, j) binom(l, x - j) t^j; returns A -> coefficients in t.
std::map<int, std::vector<std::int64_t>> lambda_block_product_expansion(std::span<const int> parts);

/// Cosine expansion of the composition's term: harmonic A >= 0 gets
/// T(A) + T(-A) (A > 0) or T(0) (A = 0). Throws on an empty composition.
CosinePolynomial composition_term(const Composition& c);

struct EnumerationOptions {
  /// Worker threads for the per-composition map-reduce; results do not
  /// depend on this value.
  unsigned threads = 1;
};

/// [q] a_{p,q}(n): sum over compositions of n/2 of coefficient * term.
/// n even, n >= 2.
CosinePolynomial first_order_q(int n, const EnumerationOptions& options = {});

/// C_n(A) for every A. n even, n >= 2; odd n throws "length must be even".
AreaDistribution enumerate_areas(int n, const EnumerationOptions& options = {});

/// Z_n(Q) = sum_A C_n(A) Q^A.
LaurentPolynomial generating_polynomial(int n, const EnumerationOptions& options = {});

LaurentPolynomial to_laurent(const AreaDistribution& d);

/// sum_A C(A) e^{2 i pi A p/q}.
std::complex<double> evaluate_at_flux(const AreaDistribution& d, const RationalFlux& flux);

/// Entry m is C_{m,m,n/2-m,n/2-m}(A): closed walks with m right and m left
/// steps, from the lambda-deformed formula. Size n/2 + 1.
std::vector<AreaDistribution> lambda_area_table(int n, const EnumerationOptions& options = {});

/// Row m of lambda_area_table; throws InvalidArgument unless 0 <= m <= n/2.
AreaDistribution lambda_area_counts(int n, int m, const EnumerationOptions& options = {});

}  // namespace areawalk
