#pragma once

#include <stdexcept>
#include <string>

#include "liegen/heisenberg/ladder.hpp"
#include "liegen/numeric/sqrt_rational.hpp"

namespace liegen::hermite {

inline constexpr unsigned kDefaultMaxN = 64;

/// H_n as the polynomial part of b+^n (1 w), i.e. e^{x^2/2} (x - d/dx)^n e^{-x^2/2}.
inline Polynomial hermite_rodrigues(unsigned n, unsigned max_n = kDefaultMaxN) {
  if (n > max_n)
    throw EnvelopeError("hermite order " + std::to_string(n) + " exceeds configured maximum " + std::to_string(max_n));
  GaussianWeighted f{Polynomial(1)};
  for (unsigned k = 0; k < n; ++k) f = apply_ladder(LadderKind::b_plus, f);
  return f.p;
}

/// H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
inline Polynomial hermite_recurrence(unsigned n) {
  Polynomial prev(1);
  if (n == 0) return prev;
  Polynomial cur = 2 * poly_x;
  for (unsigned k = 1; k < n; ++k) {
    Polynomial next = 2 * cur.times(Var::x) - prev * Rational(2 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Square of the normalization of <x|n> with the sqrt(pi) factor held out:
/// |<x|n>|^2 = squared_value * H_n^2 e^{-x^2} / sqrt(pi), squared_value = 1/(n! 2^n).
struct NormFactor {
  Rational squared_value = 1;

  friend bool operator==(const NormFactor&, const NormFactor&) = default;
};

struct MixedBasisState {
  GaussianWeighted f;  // H_n w
  NormFactor norm;
};

/// <x|n> = H_n(x) e^{-x^2/2} / sqrt(n! 2^n sqrt(pi)), carried as (H_n w, 1/(n! 2^n)).
inline MixedBasisState mixed_basis(unsigned n, unsigned max_n = kDefaultMaxN) {
  return {{hermite_rodrigues(n, max_n)}, {Rational(1) / Rational(factorial(n) << n)}};
}

/// Integral over the real line of p(x) e^{-x^2} as a multiple of sqrt(pi).
inline SqrtPiMultiple gaussian_integral(const Polynomial& p) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] || e[2]) throw std::invalid_argument("gaussian_integral needs a polynomial in x alone");
    sum += c * gaussian_moment(e[0]).coeff;
  }
  return {sum};
}

/// Exact overlap integral of <x|n><x|m>. The sqrt(pi) of the Gaussian
/// integral cancels the one in the normalization symbolically.
inline SqrtRational overlap(const MixedBasisState& a, const MixedBasisState& b) {
  const Rational integral = gaussian_integral(a.f.p * b.f.p).coeff;
  return SqrtRational(integral, a.norm.squared_value * b.norm.squared_value);
}

inline SqrtRational overlap(unsigned n, unsigned m) { return overlap(mixed_basis(n), mixed_basis(m)); }

}  // namespace liegen::hermite
