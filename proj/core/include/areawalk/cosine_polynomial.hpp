#pragma once

#include <map>
#include <string>
#include <utility>

#include "areawalk/exact.hpp"

namespace areawalk {

/// Magnetic flux 2*pi*p/q per lattice cell, with gcd(p, q) == 1.
class RationalFlux {
 public:
  /// Throws InvalidArgument unless p >= 0, q >= 1 and gcd(p, q) == 1.
  RationalFlux(long p, long q);

  long p() const noexcept { return p_; }
  long q() const noexcept { return q_; }

  /// 2*pi*p/q.
  double angle() const noexcept;

  /// cos(2*pi*harmonic*p/q), with the phase reduced mod q before the call
  /// to std::cos so that large harmonics stay accurate.
  double cos_harmonic(long harmonic) const noexcept;
  double sin_harmonic(long harmonic) const noexcept;

  std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  friend bool operator==(const RationalFlux&, const RationalFlux&) = default;

 private:
  long p_;
  long q_;
};

/// sum_A c_A cos(2*pi*A*p/q) over harmonics A >= 0. The A = 0 coefficient is
/// stored as-is (not doubled), matching the expansions it represents.
class CosinePolynomial {
 public:
  using Map = std::map<int, BigRatio>;

  CosinePolynomial() = default;
  explicit CosinePolynomial(Map coeffs);

  /// Coefficient of harmonic A (zero if absent).
  BigRatio at(int harmonic) const;
  const Map& coefficients() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  /// Adds `value` to harmonic A; entries that become zero are erased.
  void add(int harmonic, const BigRatio& value);

  CosinePolynomial& operator+=(const CosinePolynomial& other);
  CosinePolynomial& operator*=(const BigRatio& factor);

  /// Value with every cosine set to 1 (flux 0/1), exact.
  BigRatio sum() const;

  /// Value at the given flux.
  double evaluate(const RationalFlux& flux) const;

  /// Harmonic A moved to r*A (stride substitution). r >= 1.
  CosinePolynomial dilated(int r) const;

  friend bool operator==(const CosinePolynomial&, const CosinePolynomial&) = default;

 private:
  Map coeffs_;
};

/// sum over (q power, harmonic) of c * q^k * cos(2*pi*A*p/q): a Kreft
/// coefficient written as a polynomial in q with cosine coefficients.
class QCosinePolynomial {
 public:
  using Key = std::pair<int, int>;  // (power of q, harmonic)
  using Map = std::map<Key, BigRatio>;

  QCosinePolynomial() = default;
  explicit QCosinePolynomial(Map coeffs);

  const Map& coefficients() const noexcept { return coeffs_; }
  BigRatio at(int q_power, int harmonic) const;
  int q_degree() const noexcept;

  /// Coefficient of q^k as a cosine polynomial.
  CosinePolynomial slice(int q_power) const;

  double evaluate(const RationalFlux& flux) const;

  friend bool operator==(const QCosinePolynomial&, const QCosinePolynomial&) = default;

 private:
  Map coeffs_;
};

}  // namespace areawalk
