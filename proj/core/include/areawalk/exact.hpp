#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace areawalk {

/// Arbitrary-precision signed integer used for every walk count.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational in canonical form (reduced, positive denominator).
using BigRatio = boost::multiprecision::cpp_rational;

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a result that must be exact and integral is not.
/// Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigCount& v) { return v.str(); }

inline std::string to_string(const BigRatio& v) {
  const auto num = boost::multiprecision::numerator(v);
  const auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const BigCount& v) { return v.convert_to<double>(); }
inline double to_double(const BigRatio& v) { return v.convert_to<double>(); }
inline long double to_long_double(const BigRatio& v) { return v.convert_to<long double>(); }

/// Tolerance for every floating-point identity in the library.
inline constexpr double kRelativeTolerance = 1e-9;

/// |a - b| / max(1, |a|, |b|). The floor of 1 keeps identities whose exact
/// value is zero on an absolute scale.
inline double relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Parses a decimal string into a BigCount; throws InvalidArgument on junk.
BigCount parse_count(const std::string& text);

/// Returns the integer value of `r`, or throws InvariantViolation naming
/// `what` if `r` is not integral.
BigCount require_integral(const BigRatio& r, const char* what);

}  // namespace areawalk
