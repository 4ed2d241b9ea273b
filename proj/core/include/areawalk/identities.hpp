#pragma once

#include <span>

#include "areawalk/cosine_polynomial.hpp"
#include "areawalk/exact.hpp"

namespace areawalk {

struct IdentityCheck {
  BigCount lhs;
  BigCount rhs;
  bool holds = false;
};

/// binom(l1 + l2, l1' + l2') == sum_A binom(l1, l1' + A) binom(l2, l2' - A).
/// All arguments in [0, 30].
bool chu_vandermonde(int l1, int l2, int l1p, int l2p);

/// binom(sum u_i, sum w_i) against
///   sum_A sum_{k_3..k_j} prod_i binom(u_i, w_i - k_{i,j} + A (delta_{i,j-1} - delta_{i,j})).
/// `upper` and `lower` have the same length j in [1, 5], entries in [0, 12].
/// For j = 1 there is nothing to sum and both sides are binom(u_1, w_1).
IdentityCheck multi_binomial_identity(std::span<const int> upper, std::span<const int> lower);

/// The doubled form: upper = 2 l, lower = l. Parts in [0, 6].
IdentityCheck multi_binomial_identity_doubled(std::span<const int> parts);

struct PairedSumCheck {
  double numeric_lhs = 0;  // three-shift average plus the product of separate averages
  double numeric_rhs = 0;  // cosine-weighted binomial sums
  BigCount exact_lhs;      // binom(2L, L) + binom(2 l2, l2) binom(2(l1 + l3), l1 + l3)
  BigCount exact_rhs;      // same sums with every cosine set to 1
  bool numeric_holds = false;
  bool exact_holds = false;
  bool holds() const { return numeric_holds && exact_holds; }
};

/// Identity for b(k)^l1 b(k-1)^l2 b(k-2)^l3 paired with the split product,
/// L = l1 + l2 + l3. Parts in [0, 3], q > 2L.
PairedSumCheck paired_sum_identity(int l1, int l2, int l3, const RationalFlux& flux);

}  // namespace areawalk
