#pragma once

#include <stdexcept>
#include <string>

#include "liegen/euclidean/bessel.hpp"
#include "liegen/euclidean/flow.hpp"

namespace liegen::bessel {

enum class BesselIdentity { ode_A6, recursion_A7, diffrel_A8, diffrel_A9, diffrel_A10 };

inline const char* identity_name(BesselIdentity which) {
  switch (which) {
    case BesselIdentity::ode_A6: return "ode_A6";
    case BesselIdentity::recursion_A7: return "recursion_A7";
    case BesselIdentity::diffrel_A8: return "diffrel_A8";
    case BesselIdentity::diffrel_A9: return "diffrel_A9";
    case BesselIdentity::diffrel_A10: return "diffrel_A10";
  }
  return "?";
}

inline constexpr Real kIdentityMinR = 0.1L, kIdentityMaxR = 20;
inline constexpr int kIdentityMaxOrder = 10;

/// Absolute residual of a Bessel ODE, recursion or differential relation at
/// real argument r.
inline Real verify_bessel_identity(BesselIdentity which, int n, Real r, const BesselEval& cfg = {}) {
  if (r < kIdentityMinR || r > kIdentityMaxR || std::abs(n) > kIdentityMaxOrder)
    throw EnvelopeError("identity check outside 0.1 <= r <= 20, |n| <= 10");
  const auto [j, dj, d2j] = bessel_derivatives(n, Complex(r), cfg);
  const Complex prev = bessel_j(n - 1, Complex(r), cfg), next = bessel_j(n + 1, Complex(r), cfg);
  const Real nr = Real(n) / r;
  Complex res;
  switch (which) {
    case BesselIdentity::ode_A6: res = d2j + dj / r + (1 - nr * nr) * j; break;
    case BesselIdentity::recursion_A7: res = 2 * nr * j - prev - next; break;
    case BesselIdentity::diffrel_A8: res = dj - nr * j + next; break;
    case BesselIdentity::diffrel_A9: res = -dj - nr * j + prev; break;
    case BesselIdentity::diffrel_A10: res = Real(2) * dj - prev + next; break;
  }
  return std::abs(res);
}

/// Principal square root left the right half-plane; the branch of the
/// generating-function argument is ambiguous.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr Real kGenfuncMaxT = 0.5L, kGenfuncMinR = 0.5L, kGenfuncMaxR = 10;
inline constexpr unsigned kGenfuncMinTerms = 30;

/// Which closed form stands on the left of the translation generating function.
enum class GenfuncForm {
  printed,   // e^{i n phi} J_n(sqrt(r^2 + 2t(ix - y)))
  corrected  // J_n(u) ((x + iy)/u)^n, u^2 = r^2 + 2t(x + iy)
};

namespace detail {

inline void check_genfunc_domain(Real r, const Complex& t, unsigned terms) {
  if (std::abs(t) > kGenfuncMaxT) throw EnvelopeError("generating function check needs |t| <= 0.5");
  if (r < kGenfuncMinR || r > kGenfuncMaxR) throw EnvelopeError("generating function check needs 0.5 <= r <= 10");
  if (terms < kGenfuncMinTerms) throw std::invalid_argument("generating function check needs M >= 30");
}

// Evaluator with the order envelope widened to cover J_{n+m}, m < M.
inline BesselEval widened(const BesselEval& cfg, int n, unsigned terms) {
  BesselEval wide = cfg;
  wide.max_order = std::max(cfg.max_order, std::abs(n) + static_cast<int>(terms));
  return wide;
}

}  // namespace detail

/// sum_{m<M} (-1)^m t^m / m! e^{i(n+m)phi} J_{n+m}(r)
inline Complex genfunc_series_side(int n, Real r, Real phi, const Complex& t, unsigned terms,
                                   const BesselEval& cfg = {}) {
  const BesselEval wide = detail::widened(cfg, n, terms);
  Complex sum = 0, weight = 1;  // (-t)^m / m!
  for (unsigned m = 0; m < terms; ++m) {
    sum += weight * std::polar(Real(1), (n + static_cast<int>(m)) * phi) * bessel_j(n + static_cast<int>(m), Complex(r), wide);
    weight *= -t / Real(m + 1);
  }
  return sum;
}

inline Complex genfunc_closed_side(GenfuncForm form, int n, Real r, Real phi, const Complex& t,
                                   const BesselEval& cfg = {}) {
  const Complex i(0, 1);
  const Real x = r * std::cos(phi), y = r * std::sin(phi);
  if (form == GenfuncForm::printed) {
    const Complex radicand = r * r + Real(2) * t * (i * x - y);
    if (radicand.real() <= 0) throw BranchError("radicand r^2 + 2t(ix - y) has non-positive real part");
    return std::polar(Real(1), n * phi) * bessel_j(n, std::sqrt(radicand), cfg);
  }
  // J_n(u) / u^n is even in u, so this form does not depend on the branch
  const Complex w(x, y);
  const Complex radicand = r * r + Real(2) * t * w;
  if (radicand == Complex(0)) {
    // limit u -> 0: J_n(u) / u^n -> 1 / (2^n n!) for n >= 0, and the
    // negative orders vanish there
    if (n < 0) return 0;
    Real c = 1;
    for (int k = 1; k <= n; ++k) c /= 2 * Real(k);
    return c * std::pow(w, n);
  }
  const Complex u = std::sqrt(radicand);
  return bessel_j(n, u, cfg) * std::pow(w / u, n);
}

/// |closed side - series side| of the translation generating function.
inline Real genfunc_a11_check(int n, Real r, Real phi, const Complex& t, unsigned terms = kGenfuncMinTerms,
                              GenfuncForm form = GenfuncForm::printed, const BesselEval& cfg = {}) {
  detail::check_genfunc_domain(r, t, terms);
  const Complex lhs = genfunc_closed_side(form, n, r, phi, t, cfg);
  return std::abs(lhs - genfunc_series_side(n, r, phi, t, terms, cfg));
}

/// Residuals of the flow-based generating function against the common series
/// side: the printed left side, and e^{i n phi(t)} J_n(r(t)) with the closed
/// forms r(t) = sqrt(2 r phi t + r^2), phi(t) = r phi / r(t).
struct A12Report {
  int n = 0;
  Real r = 0, phi = 0;
  Complex t;
  unsigned terms = 0;
  Real residual_paper_form = 0;
  Real residual_corrected_form = 0;
  /// e^{i n phi(t)} J_n(r(t)) along the exact complex flow, see flow_exact.
  Real residual_exact_flow = 0;

  const char* smaller_residual() const {
    return residual_corrected_form < residual_paper_form ? "corrected_form" : "paper_form";
  }
};

inline A12Report genfunc_a12_diagnostic(int n, Real r, Real phi, const Complex& t, unsigned terms = kGenfuncMinTerms,
                                        const BesselEval& cfg = {}) {
  detail::check_genfunc_domain(r, t, terms);
  const Complex radicand = 2 * r * phi * t + r * r;
  if (radicand.real() <= 0) throw BranchError("radicand 2 r phi t + r^2 has non-positive real part");
  const Complex rt = std::sqrt(radicand);
  const Complex phit = r * phi / rt;
  const Complex rhs = genfunc_series_side(n, r, phi, t, terms, cfg);
  const Complex paper = std::exp(phit) * bessel_j(n, rt, cfg);
  const Complex corrected = std::exp(Complex(0, 1) * Real(n) * phit) * bessel_j(n, rt, cfg);
  const auto [re, phie] = flow_exact(r, phi, t);
  const Complex exact = std::exp(Complex(0, 1) * Real(n) * phie) * bessel_j(n, re, cfg);
  return {n, r, phi, t, terms, std::abs(paper - rhs), std::abs(corrected - rhs), std::abs(exact - rhs)};
}

}  // namespace liegen::bessel
