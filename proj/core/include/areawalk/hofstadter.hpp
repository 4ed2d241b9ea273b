#pragma once

#include <complex>

#include "areawalk/cosine_polynomial.hpp"

namespace areawalk {

/// Per-site moment Tr H^n from Kreft coefficients:
///   (n/q) sum_{k>=0} sum_{m: sum_i i m_i = n/2 - kq, i <= q/2}
///     multinomial(m, 2k) / (sum m + 2k) * binom(2k, k)^2 * prod_i a_{p,q}(2i)^{m_i}.
/// n even, n >= 2.
double trace_formula(int n, const RationalFlux& flux);

/// (n/q) sum_{m: sum_j j m_j = n/2} multinomial(m) / (sum m) prod_j a_{p,q}(2j)^{m_j},
/// with extrapolated Kreft coefficients where 2j > q. n even, n >= 2.
double trace_partition(int n, const RationalFlux& flux);

/// Brillouin-zone average of (1/q) Tr H(k1, k2)^n for the q x q Bloch
/// Hamiltonian in Landau gauge:
///   H[m][m]       = 2 cos(k2 + 2 pi p m / q)
///   H[m+1][m]     = 1 for m < q-1,  H[0][q-1] gains e^{-i q k1}
///   (Hermitian).  For q = 1 the two hoppings fold onto the diagonal.
/// The average uses a uniform (n+2) x (n+2) grid, exact for the occurring
/// trigonometric degrees. Any n >= 0 is accepted here; `kappa2_shift`
/// offsets the k2 grid. q <= 16.
std::complex<double> brillouin_moment(int n, const RationalFlux& flux, double kappa2_shift = 0.0);

/// Real part of brillouin_moment; n even, n >= 2, q <= 16.
double trace_matrix(int n, const RationalFlux& flux);

struct MomentReport {
  int n = 0;
  long p = 0;
  long q = 1;
  double from_areas = 0;        // Re Z_n(e^{2 i pi p/q}) from enumerate_areas
  double formula = 0;           // trace_formula
  double partition = 0;         // trace_partition
  double matrix = 0;            // trace_matrix
  double first_order = 0;       // n * [q] a_{p,q}(n)
  double max_deviation = 0;     // max pairwise relative_deviation
  bool passed = false;          // max_deviation <= kRelativeTolerance
};

/// Five-way comparison of the n-th moment. n even, n >= 2, q <= 16.
MomentReport verify_moment_identity(int n, const RationalFlux& flux);

}  // namespace areawalk
