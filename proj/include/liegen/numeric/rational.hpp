#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace liegen {

/// Arbitrary-precision integer and exact rational. cpp_rational keeps every
/// value in lowest terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Widest native binary float; all numeric tolerances assume it.
using Real = long double;
using Complex = std::complex<Real>;

/// Raised when an argument leaves a documented evaluation envelope.
class EnvelopeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline Real to_real(const Rational& q) { return q.convert_to<Real>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

/// Finite check; NaN and infinities are error states for ComplexValue.
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace liegen
