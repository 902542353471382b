#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "liegen/numeric/polynomial.hpp"
#include "liegen/numeric/rational.hpp"

namespace liegen {

/// Truncated formal power series in t. The truncation order is fixed at
/// construction; arithmetic requires matching orders and never extends them.
/// Coeff is Rational or Polynomial (any ring with Rational scaling).
template <typename Coeff>
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Coeff(0)) {}

  PowerSeries(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) throw std::invalid_argument("more coefficients than order allows");
    coeffs_.resize(order + 1, Coeff(0));
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  const Coeff& operator[](std::size_t k) const { return coeffs_.at(k); }
  Coeff& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!(c == Coeff(0))) return false;
    return true;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }

  PowerSeries& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.check_order(b);
    PowerSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
      if (a.coeffs_[i] == Coeff(0)) continue;
      for (std::size_t j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check_order(const PowerSeries& o) const {
    if (o.order() != order())
      throw std::invalid_argument("power series orders differ: " + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()));
  }

  std::vector<Coeff> coeffs_;
};

/// exp(s) truncated at order K, from the recurrence k e_k = sum_j j s_j e_{k-j}
/// implied by E' = s' E. Requires a zero constant term and s.order() >= K.
template <typename Coeff>
PowerSeries<Coeff> series_exp(const PowerSeries<Coeff>& s, std::size_t order) {
  if (!(s[0] == Coeff(0))) throw std::domain_error("series_exp needs a zero constant term");
  if (s.order() < order) throw std::invalid_argument("series_exp order exceeds the argument's truncation");
  PowerSeries<Coeff> e(order);
  e[0] = Coeff(1);
  for (std::size_t k = 1; k <= order; ++k) {
    Coeff acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (s[j] == Coeff(0)) continue;
      acc += (s[j] * e[k - j]) * Rational(static_cast<long long>(j));
    }
    e[k] = acc * Rational(1, static_cast<long long>(k));
  }
  return e;
}

/// outer(inner(t)) for scalar outer coefficients; inner needs a zero constant term.
template <typename Coeff>
PowerSeries<Coeff> compose(const PowerSeries<Rational>& outer, const PowerSeries<Coeff>& inner) {
  if (!(inner[0] == Coeff(0))) throw std::domain_error("compose needs an inner series without constant term");
  const std::size_t order = inner.order();
  if (outer.order() < order) throw std::invalid_argument("compose: outer series truncated below inner order");
  PowerSeries<Coeff> result(order);
  PowerSeries<Coeff> power(order);
  power[0] = Coeff(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (outer[k] != 0) result += power * outer[k];
    power = power * inner;
  }
  return result;
}

}  // namespace liegen
