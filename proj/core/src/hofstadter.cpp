#include "areawalk/hofstadter.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "areawalk/area_enum.hpp"
#include "areawalk/combinatorics.hpp"
#include "areawalk/kreft.hpp"

namespace areawalk {

namespace {

using Real = long double;

constexpr long kMaxMatrixQ = 16;

void require_even_moment(int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("moment order must be even and >= 2");
}

Real to_real(const BigCount& v) { return v.convert_to<Real>(); }

}  // namespace

double trace_formula(int n, const RationalFlux& flux) {
  require_even_moment(n);
  const long q = flux.q();
  const int half = static_cast<int>(q / 2);
  std::vector<Real> base;
  for (int i = 1; i <= half; ++i) base.push_back(kreft_direct(flux, i));

  Real sum = 0;
  for (long k = 0; n / 2 - k * q >= 0; ++k) {
    const BigCount central = binomial(2 * static_cast<int>(k), static_cast<int>(k));
    const Real central_sq = to_real(central * central);
    for_each_multiplicity_vector(static_cast<int>(n / 2 - k * q), half, [&](std::span<const int> mult) {
      std::vector<int> slots(mult.begin(), mult.end());
      slots.push_back(2 * static_cast<int>(k));
      int parts = 0;
      for (int m : slots) parts += m;
      Real term = to_real(multinomial(slots)) / parts * central_sq;
      for (std::size_t i = 0; i < mult.size(); ++i) term *= std::pow(base[i], mult[i]);
      sum += term;
    });
  }
  return static_cast<double>(sum * n / static_cast<Real>(q));
}

double trace_partition(int n, const RationalFlux& flux) {
  require_even_moment(n);
  const int h = n / 2;
  std::vector<Real> coeff;
  for (int j = 1; j <= h; ++j) coeff.push_back(kreft_coefficient(flux, j));

  Real sum = 0;
  for_each_multiplicity_vector(h, h, [&](std::span<const int> mult) {
    int parts = 0;
    for (int m : mult) parts += m;
    Real term = to_real(multinomial(mult)) / parts;
    for (std::size_t i = 0; i < mult.size(); ++i) term *= std::pow(coeff[i], mult[i]);
    sum += term;
  });
  return static_cast<double>(sum * n / static_cast<Real>(flux.q()));
}

namespace {

using Matrix = Eigen::MatrixXcd;

Matrix bloch_hamiltonian(const RationalFlux& flux, double k1, double k2) {
  const auto q = static_cast<Eigen::Index>(flux.q());
  Matrix h = Matrix::Zero(q, q);
  const double gamma = flux.angle();
  for (Eigen::Index m = 0; m < q; ++m) {
    h(m, m) += 2.0 * std::cos(k2 + gamma * static_cast<double>(m));
    // hop m -> m+1; the last one wraps into the next magnetic cell
    const Eigen::Index next = (m + 1) % q;
    const std::complex<double> phase =
        (m == q - 1) ? std::polar(1.0, static_cast<double>(q) * k1) : std::complex<double>(1.0, 0.0);
    h(next, m) += phase;
    h(m, next) += std::conj(phase);
  }
  return h;
}

std::complex<double> trace_power(const Matrix& h, int n) {
  Matrix acc = Matrix::Identity(h.rows(), h.cols());
  Matrix base = h;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc.trace();
}

// Pairwise reduction with a fixed tree so results do not depend on how the
// grid is traversed.
std::complex<double> pairwise_sum(std::vector<std::complex<double>>& v) {
  if (v.empty()) return 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t i = 0; i + width < v.size(); i += 2 * width) v[i] += v[i + width];
  }
  return v.front();
}

}  // namespace

std::complex<double> brillouin_moment(int n, const RationalFlux& flux, double kappa2_shift) {
  if (n < 0) throw InvalidArgument("moment order must be >= 0");
  if (flux.q() > kMaxMatrixQ) throw InvalidArgument("trace_matrix supports q <= 16");
  const int grid = n + 2;
  const double step = 2.0 * std::numbers::pi / grid;
  std::vector<std::complex<double>> samples;
  samples.reserve(static_cast<std::size_t>(grid) * grid);
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      samples.push_back(trace_power(bloch_hamiltonian(flux, a * step, b * step + kappa2_shift), n));
    }
  }
  const std::complex<double> total = pairwise_sum(samples);
  return total / (static_cast<double>(grid) * grid * static_cast<double>(flux.q()));
}

double trace_matrix(int n, const RationalFlux& flux) {
  require_even_moment(n);
  return brillouin_moment(n, flux).real();
}

MomentReport verify_moment_identity(int n, const RationalFlux& flux) {
  require_even_moment(n);
  MomentReport r;
  r.n = n;
  r.p = flux.p();
  r.q = flux.q();
  r.from_areas = evaluate_at_flux(enumerate_areas(n), flux).real();
  r.formula = trace_formula(n, flux);
  r.partition = trace_partition(n, flux);
  r.matrix = trace_matrix(n, flux);
  r.first_order = n * first_order_q(n).evaluate(flux);

  const std::array<double, 5> values{r.from_areas, r.formula, r.partition, r.matrix, r.first_order};
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = i + 1; k < values.size(); ++k) {
      r.max_deviation = std::max(r.max_deviation, relative_deviation(values[i], values[k]));
    }
  }
  r.passed = r.max_deviation <= kRelativeTolerance;
  return r;
}

}  // namespace areawalk
