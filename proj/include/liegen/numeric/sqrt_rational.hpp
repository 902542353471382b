#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "liegen/numeric/rational.hpp"

namespace liegen {

namespace detail {

inline BigInt integer_sqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n) {
  const BigInt r = integer_sqrt(n);
  return r * r == n;
}

/// Splits n > 0 as outside^2 * inside with inside square-free. Removing every
/// prime factor up to cbrt(n) leaves a cofactor with at most two prime
/// factors, which is square-free unless it is a perfect square.
inline void square_free_split(BigInt n, BigInt& outside, BigInt& inside) {
  outside = 1;
  inside = 1;
  for (BigInt p = 2; p * p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    for (unsigned k = 0; k < mult / 2; ++k) outside *= p;
    if (mult % 2) inside *= p;
  }
  if (n > 1) {
    if (is_perfect_square(n))
      outside *= integer_sqrt(n);
    else
      inside *= n;
  }
}

}  // namespace detail

/// Exact value coeff * sqrt(radicand) with the radicand a square-free
/// positive integer (rational radicands are absorbed into coeff). The product
/// of two values with equal radicands is therefore rational.
class SqrtRational {
 public:
  SqrtRational() = default;
  SqrtRational(Rational c) : coeff_(std::move(c)) {}  // NOLINT: implicit rational
  SqrtRational(int c) : coeff_(c) {}                  // NOLINT

  SqrtRational(Rational c, const Rational& radicand) : coeff_(std::move(c)) {
    if (radicand < 0) throw std::domain_error("negative radicand");
    if (radicand == 0 || coeff_ == 0) {
      coeff_ = 0;
      return;
    }
    // sqrt(p/q) = sqrt(p*q) / q
    const BigInt p = boost::multiprecision::numerator(radicand);
    const BigInt q = boost::multiprecision::denominator(radicand);
    BigInt outside, inside;
    detail::square_free_split(p * q, outside, inside);
    coeff_ *= Rational(outside, q);
    radicand_ = inside;
  }

  static SqrtRational sqrt(const Rational& r) { return SqrtRational(1, r); }

  const Rational& coeff() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return radicand_ == 1; }

  Rational to_rational() const {
    if (!is_rational()) throw std::domain_error("value " + str() + " is irrational");
    return coeff_;
  }

  /// Exact square, always rational.
  Rational squared() const { return coeff_ * coeff_ * Rational(radicand_); }

  Real to_real() const {
    return liegen::to_real(coeff_) * std::sqrt(radicand_.convert_to<Real>());
  }

  friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.radicand_ == b.radicand_) return SqrtRational(a.coeff_ * b.coeff_ * Rational(a.radicand_));
    return SqrtRational(a.coeff_ * b.coeff_, Rational(a.radicand_ * b.radicand_));
  }

  /// Sums stay closed only when radicands agree; mixing radicals throws.
  friend SqrtRational operator+(const SqrtRational& a, const SqrtRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand_ != b.radicand_)
      throw std::domain_error("sum of unlike radicals " + a.str() + " + " + b.str());
    SqrtRational r = a;
    r.coeff_ += b.coeff_;
    if (r.coeff_ == 0) r.radicand_ = 1;
    return r;
  }

  friend SqrtRational operator-(const SqrtRational& a) {
    SqrtRational r = a;
    r.coeff_ = -r.coeff_;
    return r;
  }

  friend SqrtRational operator-(const SqrtRational& a, const SqrtRational& b) { return a + (-b); }

  SqrtRational& operator+=(const SqrtRational& o) { return *this = *this + o; }

  friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }

  std::string str() const {
    if (radicand_ == 1) return coeff_.str();
    std::string s = coeff_ == 1 ? "" : (coeff_ == -1 ? "-" : coeff_.str() + "*");
    return s + "sqrt(" + radicand_.str() + ")";
  }

 private:
  Rational coeff_ = 0;
  BigInt radicand_ = 1;
};

/// Exact Gaussian integral expressed as a rational multiple of sqrt(pi).
/// sqrt(pi) is a symbolic unit here and is never expanded numerically.
struct SqrtPiMultiple {
  Rational coeff;

  friend bool operator==(const SqrtPiMultiple&, const SqrtPiMultiple&) = default;
  Real to_real() const { return liegen::to_real(coeff) * std::sqrt(3.14159265358979323846264338327950288L); }
};

/// Integral of x^k exp(-x^2) over the real line: zero for odd k and
/// (k-1)!! / 2^(k/2) * sqrt(pi) for even k.
inline SqrtPiMultiple gaussian_moment(unsigned k) {
  if (k % 2) return {0};
  Rational m = 1;
  for (unsigned j = 2; j <= k; j += 2) m *= Rational(BigInt(j - 1), BigInt(2));
  return {m};
}

}  // namespace liegen
