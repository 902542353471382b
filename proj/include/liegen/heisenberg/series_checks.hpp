#pragma once

#include "liegen/heisenberg/hermite.hpp"
#include "liegen/numeric/power_series.hpp"

namespace liegen::hermite {

using SeriesT = PowerSeries<Polynomial>;

/// e^{-tD} f = sum_k (-t)^k f^(k) / k!, truncated at order K. Exactly
/// f(x - t) when deg f <= K.
inline SeriesT shift_series(const Polynomial& f, std::size_t order) {
  SeriesT s(order);
  Polynomial d = f;
  Rational scale = 1;
  for (std::size_t k = 0; k <= order && !d.is_zero(); ++k) {
    s[k] = d * scale;
    d = d.derivative(Var::x);
    scale = -scale / Rational(static_cast<long long>(k + 1));
  }
  return s;
}

/// Shift of a Gaussian-weighted function: coefficients are polynomial parts of
/// (-1)^k D^k (p w) / k!, with D acting through the weight as d/dx - x.
inline SeriesT shift_series(const GaussianWeighted& f, std::size_t order) {
  SeriesT s(order);
  GaussianWeighted d = f;
  Rational scale = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    s[k] = d.p * scale;
    d = apply_ladder(LadderKind::derivative, d);
    scale = -scale / Rational(static_cast<long long>(k + 1));
  }
  return s;
}

/// The two sides of e^{t(x-D)} (1 w), both as series of Gaussian-weighted
/// coefficients. The common pi^{-1/4} normalization of the ground state
/// multiplies both sides and is left out.
struct DisentangleSides {
  SeriesT operator_series;  // sum_k t^k (x - D)^k w / k!
  SeriesT factorized;       // e^{tx} e^{-t^2/2} e^{-tD} w
};

inline DisentangleSides disentangle_sides(std::size_t order) {
  SeriesT direct(order);
  GaussianWeighted power{Polynomial(1)};
  Rational inv_fact = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    direct[k] = power.p * inv_fact;
    power = apply_ladder(LadderKind::b_plus, power);
    inv_fact /= Rational(static_cast<long long>(k + 1));
  }

  SeriesT tx(order), half_t2(order);
  tx[1] = poly_x;
  if (order >= 2) half_t2[2] = Polynomial(Rational(-1, 2));
  const SeriesT factorized =
      series_exp(tx, order) * series_exp(half_t2, order) * shift_series(GaussianWeighted{Polynomial(1)}, order);
  return {direct, factorized};
}

/// Coefficientwise difference of the two expansions; the zero series when the
/// disentangling identity e^{t(x-D)} = e^{tx} e^{-t^2/2} e^{-tD} holds.
inline SeriesT disentangle_check(std::size_t order) {
  if (order < 1) throw std::invalid_argument("disentangle_check needs order >= 1");
  const auto sides = disentangle_sides(order);
  return sides.operator_series - sides.factorized;
}

/// exp(2xt - t^2) - sum_{n <= K} H_n t^n / n! with H_n from the ladder path.
inline SeriesT hermite_genfunc_check(std::size_t order, unsigned max_n = kDefaultMaxN) {
  if (order < 1) throw std::invalid_argument("hermite_genfunc_check needs order >= 1");
  SeriesT arg(order);
  arg[1] = 2 * poly_x;
  if (order >= 2) arg[2] = Polynomial(-1);
  SeriesT residual = series_exp(arg, order);
  for (std::size_t n = 0; n <= order; ++n)
    residual[n] -= hermite_rodrigues(static_cast<unsigned>(n), max_n) * (Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
  return residual;
}

}  // namespace liegen::hermite
