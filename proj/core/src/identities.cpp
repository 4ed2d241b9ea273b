#include "areawalk/identities.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "areawalk/area_enum.hpp"
#include "areawalk/combinatorics.hpp"
#include "areawalk/kreft.hpp"

namespace areawalk {

bool chu_vandermonde(int l1, int l2, int l1p, int l2p) {
  for (int v : {l1, l2, l1p, l2p}) {
    if (v < 0 || v > 30) throw InvalidArgument("chu_vandermonde arguments must be in [0, 30]");
  }
  BigCount rhs = 0;
  for (int a = -l1p; a <= l1 - l1p; ++a) rhs += binomial(l1, l1p + a) * binomial(l2, l2p - a);
  return binomial(l1 + l2, l1p + l2p) == rhs;
}

namespace {

constexpr int kMaxBlocks = 5;
constexpr int kMaxUpper = 12;

struct Range {
  long lo;
  long hi;
};

// The binomial arguments are affine in v = (A, k_3, ..., k_j):
//   arg = lower + M v.
// M has full column rank, so A is a fixed linear form in (arg - lower)
// and its extremes over the box 0 <= arg_i <= upper_i bound the A sum.
Range area_range(const KWeightMatrix& w, std::span<const int> upper, std::span<const int> lower) {
  const int j = static_cast<int>(upper.size());
  Eigen::MatrixXd m(j, j - 1);
  for (int i = 1; i <= j; ++i) {
    m(i - 1, 0) = w.area_sign(i);
    for (int r = 3; r <= j; ++r) m(i - 1, r - 2) = -w.weight(r, i);
  }
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
  if (cod.rank() != j - 1) throw InvariantViolation("k-weight map is not injective");
  const Eigen::MatrixXd pinv = cod.pseudoInverse();

  double lo = 0;
  double hi = 0;
  for (int i = 0; i < j; ++i) {
    const double c = pinv(0, i);
    const double a = c * (0 - lower[static_cast<std::size_t>(i)]);
    const double b = c * (upper[static_cast<std::size_t>(i)] - lower[static_cast<std::size_t>(i)]);
    lo += std::min(a, b);
    hi += std::max(a, b);
  }
  return {static_cast<long>(std::floor(lo - 1e-6)), static_cast<long>(std::ceil(hi + 1e-6))};
}

class MultiSum {
 public:
  MultiSum(std::span<const int> upper, std::span<const int> lower)
      : upper_(upper), lower_(lower), j_(static_cast<int>(upper.size())), w_(j_), k_(j_ - 2, 0) {
    for (int r = 3; r <= j_; ++r) {
      if (w_.weight(r, r) != -1) throw InvariantViolation("k_r must enter block r with unit weight");
    }
  }

  BigCount run() {
    const Range a = area_range(w_, upper_, lower_);
    for (area_ = a.lo; area_ <= a.hi; ++area_) descend(j_);
    return total_;
  }

 private:
  long argument(int i) const {
    return lower_[static_cast<std::size_t>(i - 1)] - k_shift(i, j_, k_) + area_ * w_.area_sign(i);
  }

  // Fix k_r for r = j .. 3 in turn. With k_{>r} fixed, block r reads
  // base + k_r, so its support pins k_r to a window of width upper_r + 1.
  void descend(int r) {
    if (r < 3) {
      BigCount term = 1;
      for (int i = 1; i <= j_ && term != 0; ++i) {
        const long arg = argument(i);
        const int u = upper_[static_cast<std::size_t>(i - 1)];
        term = (arg < 0 || arg > u) ? BigCount(0) : term * binomial(u, static_cast<int>(arg));
      }
      total_ += term;
      return;
    }
    long& kr = k_[static_cast<std::size_t>(r - 3)];
    kr = 0;
    const long base = argument(r);
    for (kr = -base; kr <= upper_[static_cast<std::size_t>(r - 1)] - base; ++kr) descend(r - 1);
    kr = 0;
  }

  std::span<const int> upper_;
  std::span<const int> lower_;
  int j_;
  KWeightMatrix w_;
  std::vector<long> k_;
  long area_ = 0;
  BigCount total_ = 0;
};

}  // namespace

IdentityCheck multi_binomial_identity(std::span<const int> upper, std::span<const int> lower) {
  if (upper.empty() || upper.size() != lower.size()) {
    throw InvalidArgument("multi_binomial_identity needs two lists of equal, non-zero length");
  }
  if (upper.size() > kMaxBlocks) throw InvalidArgument("multi_binomial_identity supports at most 5 blocks");
  int su = 0;
  int sl = 0;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (upper[i] < 0 || upper[i] > kMaxUpper || lower[i] < 0 || lower[i] > kMaxUpper) {
      throw InvalidArgument("multi_binomial_identity entries must be in [0, 12]");
    }
    su += upper[i];
    sl += lower[i];
  }

  IdentityCheck out;
  out.lhs = binomial(su, sl);
  if (upper.size() == 1) {
    out.rhs = binomial(upper[0], lower[0]);
  } else if (upper.size() == 2) {
    BigCount s = 0;
    for (int a = -lower[0]; a <= upper[0] - lower[0]; ++a) {
      s += binomial(upper[0], lower[0] + a) * binomial(upper[1], lower[1] - a);
    }
    out.rhs = s;
  } else {
    out.rhs = MultiSum(upper, lower).run();
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

IdentityCheck multi_binomial_identity_doubled(std::span<const int> parts) {
  std::vector<int> upper;
  for (int l : parts) {
    if (l < 0 || l > kMaxUpper / 2) throw InvalidArgument("doubled parts must be in [0, 6]");
    upper.push_back(2 * l);
  }
  return multi_binomial_identity(upper, parts);
}

PairedSumCheck paired_sum_identity(int l1, int l2, int l3, const RationalFlux& flux) {
  for (int l : {l1, l2, l3}) {
    if (l < 0 || l > 3) throw InvalidArgument("paired_sum_identity parts must be in [0, 3]");
  }
  const int total = l1 + l2 + l3;
  if (flux.q() <= 2L * total) throw InvalidArgument("paired_sum_identity requires q > 2(l1 + l2 + l3)");

  const long q = flux.q();
  double triple = 0;
  double middle = 0;
  double outer = 0;
  for (long k = 1; k <= q; ++k) {
    const double b0 = b_tilde(flux, k);
    const double b1 = b_tilde(flux, k - 1);
    const double b2 = b_tilde(flux, k - 2);
    triple += std::pow(b0, l1) * std::pow(b1, l2) * std::pow(b2, l3);
    middle += std::pow(b1, l2);
    outer += std::pow(b0, l1) * std::pow(b2, l3);
  }
  const double qd = static_cast<double>(q);

  auto bin = [](int n, long k) { return (k < 0 || k > n) ? BigCount(0) : binomial(n, static_cast<int>(k)); };

  // Harmonic 0, then for each A >= 1 the two mirrored k_3 sums.
  BigCount constant = 0;
  for (long k3 = 0; k3 <= 2L * total; ++k3) {
    constant += bin(2 * l1, l1 - k3) * bin(2 * l2, l2 + 2 * k3) * bin(2 * l3, l3 - k3);
  }
  constant *= 2;

  PairedSumCheck out;
  double numeric_rhs = to_double(constant);
  BigCount exact_rhs = constant;
  for (long a = 1; a <= 2L * total; ++a) {
    BigCount harmonic = 0;
    for (long k3 = -(a / 2); k3 <= 2L * total; ++k3) {
      harmonic += bin(2 * l1, l1 - k3 - a) * bin(2 * l2, l2 + 2 * k3 + a) * bin(2 * l3, l3 - k3);
      harmonic += bin(2 * l3, l3 - k3 - a) * bin(2 * l2, l2 + 2 * k3 + a) * bin(2 * l1, l1 - k3);
    }
    harmonic *= 2;
    exact_rhs += harmonic;
    numeric_rhs += to_double(harmonic) * flux.cos_harmonic(a);
  }

  out.numeric_lhs = triple / qd + (middle / qd) * (outer / qd);
  out.numeric_rhs = numeric_rhs;
  out.exact_lhs = binomial(2 * total, total) + binomial(2 * l2, l2) * binomial(2 * (l1 + l3), l1 + l3);
  out.exact_rhs = exact_rhs;
  out.numeric_holds = relative_deviation(out.numeric_lhs, out.numeric_rhs) <= kRelativeTolerance;
  out.exact_holds = out.exact_lhs == out.exact_rhs;
  return out;
}

}  // namespace areawalk
