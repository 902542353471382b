#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "liegen/heisenberg/discrete_matrix.hpp"
#include "liegen/heisenberg/hermite.hpp"
#include "liegen/heisenberg/identities.hpp"
#include "liegen/heisenberg/series_checks.hpp"

using namespace liegen;
using namespace liegen::hermite;

namespace {

// Explicit sum H_n = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
Polynomial hermite_explicit(unsigned n) {
  Polynomial p;
  for (unsigned m = 0; 2 * m <= n; ++m) {
    const unsigned k = n - 2 * m;
    Rational c = Rational(factorial(n)) / Rational(factorial(m) * factorial(k));
    c *= Rational(BigInt(1) << k);
    if (m % 2) c = -c;
    p.add_term({static_cast<std::uint16_t>(k), 0, 0}, c);
  }
  return p;
}

// <x|n> in long double via the normalized three-term recurrence for
// psi_n = H_n w / sqrt(2^n n! sqrt(pi)).
std::vector<Real> psi_values(Real x, unsigned n_max) {
  std::vector<Real> psi(n_max + 1);
  psi[0] = std::pow(std::acos(Real(-1)), Real(-0.25)) * std::exp(-x * x / 2);
  if (n_max >= 1) psi[1] = std::sqrt(Real(2)) * x * psi[0];
  for (unsigned n = 1; n < n_max; ++n)
    psi[n + 1] = std::sqrt(Real(2) / (n + 1)) * x * psi[n] - std::sqrt(Real(n) / (n + 1)) * psi[n - 1];
  return psi;
}

// Coefficient of y^k in p(x, y), as a polynomial in x.
Polynomial y_coefficient(const Polynomial& p, unsigned k) {
  Polynomial r;
  for (const auto& [e, c] : p.terms())
    if (e[1] == k) r.add_term({e[0], 0, 0}, c);
  return r;
}

}  // namespace

TEST_CASE("ladder Hermite polynomials match the explicit sum", "[hermite]") {
  for (unsigned n = 0; n <= 30; ++n) {
    INFO("n = " << n);
    CHECK(hermite_rodrigues(n) == hermite_explicit(n));
    CHECK(hermite_recurrence(n) == hermite_explicit(n));
  }
  CHECK(hermite_rodrigues(4).str() == "16x^4 - 48x^2 + 12");
}

TEST_CASE("hermite order envelope", "[hermite]") {
  CHECK_NOTHROW(hermite_rodrigues(64));
  CHECK_THROWS_AS(hermite_rodrigues(65), EnvelopeError);
  CHECK_NOTHROW(hermite_rodrigues(70, 80));
}

TEST_CASE("differential identities hold exactly", "[hermite]") {
  for (unsigned n = 0; n <= 24; ++n) {
    INFO("n = " << n);
    CHECK(verify_hermite_identity(HermiteIdentity::ode_A2, n).is_zero());
    CHECK(verify_hermite_identity(HermiteIdentity::recursion_A3, n).is_zero());
    CHECK(verify_hermite_identity(HermiteIdentity::diffrel_A4, n).is_zero());
    CHECK(verify_hermite_identity(HermiteIdentity::anticommutator, n).is_zero());
  }
}

TEST_CASE("a deliberately wrong identity leaves a nonzero residual", "[hermite]") {
  // H_3' = 6 H_2; compare against 4 H_2 instead
  const Polynomial wrong = hermite_rodrigues(3).derivative(Var::x) - hermite_rodrigues(2) * Rational(4);
  CHECK_FALSE(wrong.is_zero());
  CHECK(wrong == hermite_rodrigues(2) * Rational(2));
}

TEST_CASE("anticommutator eigenvalue", "[hermite]") {
  CHECK(anticommutator_eigenvalue(3) == 7);
  for (unsigned n = 0; n <= 20; ++n) CHECK(anticommutator_eigenvalue(n) == Rational(2 * n + 1));
  CHECK(anticommutator_operator_residual().is_zero());
}

TEST_CASE("exact overlaps agree with quadrature", "[hermite]") {
  CHECK(overlap(2, 2) == SqrtRational(1));
  CHECK(overlap(3, 1).is_zero());
  CHECK(overlap(4, 2).is_zero());

  // trapezoid rule on [-12, 12]; the integrand is smooth and decays like e^{-x^2}
  constexpr unsigned n_max = 6;
  constexpr int steps = 4800;
  const Real h = Real(24) / steps;
  std::vector<std::vector<Real>> gram(n_max + 1, std::vector<Real>(n_max + 1, 0));
  for (int i = 0; i <= steps; ++i) {
    const Real x = -12 + i * h;
    const Real wgt = (i == 0 || i == steps) ? h / 2 : h;
    const auto psi = psi_values(x, n_max);
    for (unsigned a = 0; a <= n_max; ++a)
      for (unsigned b = 0; b <= n_max; ++b) gram[a][b] += wgt * psi[a] * psi[b];
  }
  for (unsigned a = 0; a <= n_max; ++a)
    for (unsigned b = 0; b <= n_max; ++b) {
      INFO(a << "," << b);
      CHECK(std::abs(overlap(a, b).to_real() - gram[a][b]) < 1e-12);
    }
}

TEST_CASE("orthonormality residual is exactly zero", "[hermite]") {
  for (unsigned n = 0; n <= 12; ++n) CHECK(verify_hermite_identity(HermiteIdentity::orthonormality, n).is_zero());
}

TEST_CASE("mixed basis values match the normalized recurrence", "[hermite]") {
  for (Real x : {-2.5L, -0.3L, 0.0L, 0.7L, 3.1L}) {
    const auto psi = psi_values(x, 10);
    for (unsigned n = 0; n <= 10; ++n) {
      const auto s = mixed_basis(n);
      const Real value = s.f.eval(x) * std::sqrt(to_real(s.norm.squared_value)) * std::pow(std::acos(Real(-1)), Real(-0.25));
      CHECK(std::abs(value - psi[n]) < 1e-15);
    }
  }
}

TEST_CASE("truncated number-basis matrices", "[hermite][discrete]") {
  const auto am = discrete_matrix(DiscreteOp::a_minus, 8);
  const auto ap = discrete_matrix(DiscreteOp::a_plus, 8);
  const auto comm = am * ap - ap * am;
  CHECK(comm.is_diagonal());
  for (std::size_t n = 0; n < 7; ++n) CHECK(comm(n, n) == SqrtRational(1));
  // truncation artifact in the last diagonal entry
  CHECK(comm(7, 7) == SqrtRational(-7));

  const auto am40 = discrete_matrix(DiscreteOp::a_minus, 40);
  const auto ap40 = discrete_matrix(DiscreteOp::a_plus, 40);
  const auto anti = am40 * ap40 + ap40 * am40;
  CHECK(anti.is_diagonal());
  for (std::size_t n = 0; n <= 38; ++n) CHECK(anti(n, n) == SqrtRational(static_cast<int>(2 * n + 1)));

  CHECK(am(2, 3) == SqrtRational::sqrt(3));
  CHECK(ap(3, 2) == SqrtRational::sqrt(3));
  CHECK_THROWS_AS(discrete_matrix(DiscreteOp::identity, 1), std::invalid_argument);
}

TEST_CASE("representation of h3 by ladder operators", "[hermite]") {
  CHECK(ladder_representation_check(12).is_zero());
  for (unsigned n = 0; n <= 20; ++n) CHECK(raising_consistency_residual(n).is_zero());
}

TEST_CASE("parity of the mixed basis", "[hermite]") {
  for (unsigned n = 0; n <= 16; ++n) {
    const Polynomial h = hermite_rodrigues(n);
    CHECK(h.reflect(Var::x) == (n % 2 ? h * Rational(-1) : h));
  }
}

TEST_CASE("shift series reproduces substitution", "[series]") {
  const Polynomial f = hermite_rodrigues(5) + poly_x * Rational(3, 7);
  const Polynomial shifted = f.substitute(Var::x, poly_x - poly_y);
  const auto series = shift_series(f, 8);
  for (unsigned k = 0; k <= 8; ++k) CHECK(series[k] == y_coefficient(shifted, k));

  // H_n(x - t) against the same oracle
  const Polynomial h7 = hermite_rodrigues(7);
  const auto hs = shift_series(h7, 7);
  const Polynomial h7_shift = h7.substitute(Var::x, poly_x - poly_y);
  for (unsigned k = 0; k <= 7; ++k) CHECK(hs[k] == y_coefficient(h7_shift, k));
}

TEST_CASE("weighted shift series matches a numeric shift", "[series]") {
  // sum_k s_k(x) t^k e^{-x^2/2} approximates e^{-(x-t)^2/2} for small t
  const auto s = shift_series(GaussianWeighted{Polynomial(1)}, 20);
  const Real t = 0.3L;
  for (Real x : {-1.0L, 0.2L, 1.4L}) {
    Real sum = 0, tp = 1;
    for (std::size_t k = 0; k <= 20; ++k, tp *= t) sum += s[k].eval_real(x) * tp;
    CHECK(std::abs(sum * std::exp(-x * x / 2) - std::exp(-(x - t) * (x - t) / 2)) < 1e-15);
  }
}

TEST_CASE("disentangling identity to high order", "[series]") {
  const auto sides = disentangle_sides(12);
  CHECK(sides.operator_series[1] == 2 * poly_x);
  CHECK(disentangle_check(12).is_zero());
  CHECK(disentangle_check(1).is_zero());
  CHECK_THROWS_AS(disentangle_check(0), std::invalid_argument);
}

TEST_CASE("Hermite generating function", "[series]") {
  CHECK(hermite_genfunc_check(15).is_zero());
  // coefficient k of exp(2xt - t^2) is H_k / k!
  SeriesT arg(4);
  arg[1] = 2 * poly_x;
  arg[2] = Polynomial(-1);
  const auto e = series_exp(arg, 4);
  CHECK(e[2] == hermite_explicit(2) * Rational(1, 2));
}
