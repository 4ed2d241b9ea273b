#include "areawalk/cosine_polynomial.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace areawalk {

RationalFlux::RationalFlux(long p, long q) : p_(p), q_(q) {
  if (q < 1) throw InvalidArgument("flux denominator q must be >= 1");
  if (p < 0) throw InvalidArgument("flux numerator p must be >= 0");
  if (std::gcd(p, q) != 1) {
    throw InvalidArgument("flux " + str() + " is not in lowest terms");
  }
}

double RationalFlux::angle() const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(p_) / static_cast<double>(q_);
}

namespace {

double reduced_phase(long harmonic, long p, long q) {
  // (harmonic * p) mod q in [0, q); products stay far below LONG_MAX for
  // every size this library handles.
  long r = (harmonic % q) * (p % q) % q;
  if (r < 0) r += q;
  return 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
}

}  // namespace

double RationalFlux::cos_harmonic(long harmonic) const noexcept {
  return std::cos(reduced_phase(harmonic, p_, q_));
}

double RationalFlux::sin_harmonic(long harmonic) const noexcept {
  return std::sin(reduced_phase(harmonic, p_, q_));
}

// ---------------------------------------------------------------------------

CosinePolynomial::CosinePolynomial(Map coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first < 0) throw InvalidArgument("cosine harmonics must be >= 0");
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  }
}

BigRatio CosinePolynomial::at(int harmonic) const {
  auto it = coeffs_.find(harmonic);
  return it == coeffs_.end() ? BigRatio(0) : it->second;
}

void CosinePolynomial::add(int harmonic, const BigRatio& value) {
  if (harmonic < 0) throw InvalidArgument("cosine harmonics must be >= 0");
  if (value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(harmonic, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CosinePolynomial& CosinePolynomial::operator+=(const CosinePolynomial& other) {
  for (const auto& [a, v] : other.coeffs_) add(a, v);
  return *this;
}

CosinePolynomial& CosinePolynomial::operator*=(const BigRatio& factor) {
  if (factor == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [a, v] : coeffs_) v *= factor;
  return *this;
}

BigRatio CosinePolynomial::sum() const {
  BigRatio s = 0;
  for (const auto& [a, v] : coeffs_) s += v;
  return s;
}

double CosinePolynomial::evaluate(const RationalFlux& flux) const {
  long double s = 0;
  for (const auto& [a, v] : coeffs_) {
    s += to_long_double(v) * static_cast<long double>(flux.cos_harmonic(a));
  }
  return static_cast<double>(s);
}

CosinePolynomial CosinePolynomial::dilated(int r) const {
  if (r < 1) throw InvalidArgument("dilation stride must be >= 1");
  Map out;
  for (const auto& [a, v] : coeffs_) out.emplace(a * r, v);
  return CosinePolynomial(std::move(out));
}

// ---------------------------------------------------------------------------

QCosinePolynomial::QCosinePolynomial(Map coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first.first < 0 || it->first.second < 0) {
      throw InvalidArgument("q powers and harmonics must be >= 0");
    }
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  }
}

BigRatio QCosinePolynomial::at(int q_power, int harmonic) const {
  auto it = coeffs_.find({q_power, harmonic});
  return it == coeffs_.end() ? BigRatio(0) : it->second;
}

int QCosinePolynomial::q_degree() const noexcept {
  int d = -1;
  for (const auto& [key, v] : coeffs_) d = std::max(d, key.first);
  return d;
}

CosinePolynomial QCosinePolynomial::slice(int q_power) const {
  CosinePolynomial::Map out;
  for (const auto& [key, v] : coeffs_) {
    if (key.first == q_power) out.emplace(key.second, v);
  }
  return CosinePolynomial(std::move(out));
}

double QCosinePolynomial::evaluate(const RationalFlux& flux) const {
  long double s = 0;
  const auto q = static_cast<long double>(flux.q());
  for (const auto& [key, v] : coeffs_) {
    s += to_long_double(v) * std::pow(q, key.first) *
         static_cast<long double>(flux.cos_harmonic(key.second));
  }
  return static_cast<double>(s);
}

}  // namespace areawalk
