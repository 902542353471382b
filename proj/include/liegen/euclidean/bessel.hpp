#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "liegen/numeric/rational.hpp"

namespace liegen::bessel {

/// Settings and envelope of the ascending-series evaluator.
struct BesselEval {
  Real epsilon = 1e-16L;       // relative stopping tolerance
  unsigned max_terms = 200;
  int max_order = 20;          // |n| envelope
  Real max_abs_z = 30;         // |z| envelope
};

struct BesselTriple {
  Complex value;
  Complex first;   // J'
  Complex second;  // J''
};

namespace detail {

inline Complex ipow(Complex z, unsigned p) {
  Complex r = 1;
  while (p) {
    if (p & 1U) r *= z;
    z *= z;
    p >>= 1U;
  }
  return r;
}

inline void check_envelope(int n, const Complex& z, const BesselEval& cfg) {
  if (std::abs(n) > cfg.max_order)
    throw EnvelopeError("bessel order " + std::to_string(n) + " outside |n| <= " + std::to_string(cfg.max_order));
  if (std::abs(z) > cfg.max_abs_z)
    throw EnvelopeError("bessel argument |z| = " + std::to_string(static_cast<double>(std::abs(z))) + " outside envelope");
}

inline bool small_against(const Complex& term, const Complex& sum, Real eps) {
  return term == Complex(0) || std::abs(term) < eps * std::abs(sum);
}

// J_n and its first two derivatives for n >= 0. Term k is a_k z^p with
// p = n + 2k and a_k = (-1)^k / (2^p k! (n+k)!); derivatives are taken
// on each term.
inline BesselTriple series(unsigned n, const Complex& z, const BesselEval& cfg, bool with_derivatives) {
  Real a = 1;
  for (unsigned j = 1; j <= n; ++j) a /= 2 * Real(j);
  Complex zp = ipow(z, n);
  const Complex z2 = z * z;
  BesselTriple s{};
  for (unsigned k = 0; k < cfg.max_terms; ++k) {
    const unsigned p = n + 2 * k;
    const Complex t0 = a * zp;
    Complex t1 = 0, t2 = 0;
    if (with_derivatives) {
      if (p >= 1) t1 = a * Real(p) * ipow(z, p - 1);
      if (p >= 2) t2 = a * Real(p) * Real(p - 1) * ipow(z, p - 2);
    }
    s.value += t0;
    s.first += t1;
    s.second += t2;
    if (k + 1 >= n && small_against(t0, s.value, cfg.epsilon) && small_against(t1, s.first, cfg.epsilon) &&
        small_against(t2, s.second, cfg.epsilon))
      return s;
    a = -a / (4 * Real(k + 1) * Real(n + k + 1));
    zp *= z2;
  }
  throw EnvelopeError("bessel series did not converge within " + std::to_string(cfg.max_terms) + " terms");
}

inline BesselTriple signed_series(int n, const Complex& z, const BesselEval& cfg, bool with_derivatives) {
  check_envelope(n, z, cfg);
  BesselTriple s = series(static_cast<unsigned>(std::abs(n)), z, cfg, with_derivatives);
  if (n < 0 && (-n) % 2 == 1) s = {-s.value, -s.first, -s.second};
  return s;
}

}  // namespace detail

/// J_n(z) by the ascending series; J_{-n} = (-1)^n J_n.
inline Complex bessel_j(int n, const Complex& z, const BesselEval& cfg = {}) {
  return detail::signed_series(n, z, cfg, false).value;
}

inline Real bessel_j(int n, Real x, const BesselEval& cfg = {}) { return bessel_j(n, Complex(x), cfg).real(); }

/// (J, J', J'') from the termwise-differentiated series.
inline BesselTriple bessel_derivatives(int n, const Complex& z, const BesselEval& cfg = {}) {
  return detail::signed_series(n, z, cfg, true);
}

}  // namespace liegen::bessel
