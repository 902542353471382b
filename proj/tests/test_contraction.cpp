#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liegen/contraction/legendre.hpp"
#include "liegen/contraction/limits.hpp"
#include "liegen/contraction/vector_field.hpp"

using namespace liegen;
using namespace liegen::contraction;

namespace {

VectorFieldOp random_field(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  auto poly = [&] {
    Polynomial p;
    for (const auto& m : monomial_basis(2, {Var::x, Var::y, Var::z})) p += m * Rational(c(rng), 1 + std::abs(c(rng)));
    return p;
  };
  return {poly(), poly(), poly()};
}

// (1 / (2^l l!)) d^l/dx^l (x^2 - 1)^l, then (1 - x^2)^{m/2} d^m/dx^m.
// Evaluated exactly at rational x; only the final (1 - x^2)^{m/2} is rounded.
Real legendre_rodrigues(int l, int m, const Rational& xq) {
  const Real x = to_real(xq);
  Polynomial base = poly_x * poly_x - Polynomial(1), p(1);
  for (int k = 0; k < l; ++k) p = p * base;
  p = p.derivative(Var::x, static_cast<unsigned>(l + m)) * (Rational(1) / Rational(factorial(l) << l));
  return std::pow(1 - x * x, Real(m) / 2) * to_real(p.eval(point_x(xq)));
}

}  // namespace

TEST_CASE("so(3) commutators", "[vf]") {
  CHECK(vf_commutator(vf_lx(), vf_ly()) == -vf_lz());
  CHECK(vf_commutator(vf_lx(), vf_lx()).is_zero());
  CHECK(vf_commutator(vf_ly(), vf_lz()) == -vf_lx());
  CHECK(vf_commutator(vf_lz(), vf_lx()) == -vf_ly());
  CHECK(commutator_matches_action(vf_lx(), vf_ly()));
  CHECK(commutator_matches_action(vf_lz(), vf_px()));
}

TEST_CASE("antisymmetry and Jacobi identity", "[vf]") {
  CHECK(jacobi_sum(vf_lx(), vf_ly(), vf_lz()).is_zero());
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_field(rng), b = random_field(rng), c = random_field(rng);
    CHECK((vf_commutator(a, b) + vf_commutator(b, a)).is_zero());
    CHECK(jacobi_sum(a, b, c).is_zero());
    CHECK(commutator_matches_action(a, b, 4));
  }
}

TEST_CASE("scaled basis relations", "[vf]") {
  for (const Rational& R : {Rational(1), Rational(10), Rational(1000), Rational(7, 3)}) CHECK(scaled_commutator_check(R).is_zero());
  const ScaledBasis ten(10);
  CHECK((vf_commutator(ten.lx(), ten.ly()) + Rational(1, 100) * ten.lz()).is_zero());
  const ScaledBasis big(1000);
  CHECK((vf_commutator(big.ly(), big.lz()) + big.lx()).is_zero());
  // a wrong scaling leaves a residual
  CHECK_FALSE((vf_commutator(ten.lx(), ten.ly()) + Rational(1, 10) * ten.lz()).is_zero());
  CHECK_THROWS_AS(ScaledBasis(0), std::invalid_argument);
  CHECK(contracted_relations().is_zero());
}

TEST_CASE("contraction residual", "[contraction]") {
  const std::vector<Rational> Rs{8, 16, 32, 64};
  for (const auto& r : contraction_residual(poly_y, Rs)) CHECK(r.max() == 0);
  for (const auto& r : contraction_residual(Polynomial(5), Rs)) CHECK(r.max() == 0);
  // z-independent polynomials are annihilated exactly at z = R
  for (const auto& r : contraction_residual(poly_x * poly_x * poly_y, Rs)) CHECK(r.max() == 0);

  // closed form for the local-coordinate residuals: y0 f_zeta / R and x0 f_zeta / R
  const Polynomial f = poly_x * poly_x * poly_y + poly_z * poly_y * Rational(3) - poly_z * poly_z * poly_x + poly_z;
  const Polynomial fz = f.derivative(Var::z);
  const auto res = contraction_residual(f, Rs);
  for (const auto& r : res) {
    Rational ex = 0, ey = 0;
    for (const auto& x0 : contraction_offsets())
      for (const auto& y0 : contraction_offsets()) {
        const Rational g = fz.eval(Point{x0, y0, Rational(0)});
        ex = std::max(ex, Rational(abs(y0 * g) / r.R));
        ey = std::max(ey, Rational(abs(x0 * g) / r.R));
      }
    CHECK(r.lx_residual == ex);
    CHECK(r.ly_residual == ey);
  }
  for (std::size_t k = 1; k < res.size(); ++k) CHECK(res[k].max() / res[k - 1].max() == Rational(1, 2));
  CHECK_THROWS_AS(contraction_residual(Polynomial::monomial(1, {7, 0, 0}), Rs), std::invalid_argument);
}

TEST_CASE("polar ladder-operator limit", "[contraction]") {
  CHECK(polar_ladder_limit(0, 1, 0, {1e4L}).front().residual < 1e-3);

  std::vector<Real> Rs;
  for (Real R = 8; R <= 1024; R *= 2) Rs.push_back(R);
  for (int n : {0, 1, 3})
    for (Real r : {0.5L, 1.0L, 2.5L})
      for (auto sign : {LadderSign::plus, LadderSign::minus}) {
        const auto res = polar_ladder_limit(bessel_test_function(n), sign, r, 0.3L, Rs);
        INFO("n=" << n << " r=" << static_cast<double>(r));
        for (std::size_t k = 1; k < res.size(); ++k) CHECK(res[k].residual / res[k - 1].residual <= 0.3);
        // leading geometric error |J_n'(r)| r^2 / R^2 from d/dtheta = R sec^2(theta) d/dr
        const Real dj = std::abs(bessel::bessel_derivatives(n, Complex(r)).first);
        CHECK(res.front().residual == Catch::Approx(dj * r * r / (Rs.front() * Rs.front())).epsilon(0.05));
      }

  for (const auto& p : polar_ladder_limit(constant_test_function(), LadderSign::plus, 1, 0, Rs))
    CHECK(p.residual < 1e-15);
  CHECK_THROWS_AS(polar_ladder_limit(0, 0.2L, 0, Rs), std::invalid_argument);
}

TEST_CASE("associated Legendre functions", "[legendre]") {
  CHECK(assoc_legendre(0, 0, 0.3L) == 1);
  CHECK(assoc_legendre(1, 0, 0.5L) == Catch::Approx(0.5));
  CHECK(std::abs(assoc_legendre(1, 1, 0.6L) - 0.8L) < 1e-15);
  for (Real x : {-0.9L, -0.2L, 0.0L, 0.45L, 0.99L}) {
    CHECK(std::abs(assoc_legendre(2, 0, x) - (3 * x * x - 1) / 2) < 1e-12);
    CHECK(std::abs(assoc_legendre(2, 1, x) - 3 * x * std::sqrt(1 - x * x)) < 1e-12);
  }
  for (int l : {3, 8, 17, 25})
    for (int m : {0, 1, 2, 5})
      for (const Rational& xq : {Rational(-7, 10), Rational(1, 10), Rational(4, 5), Rational(999, 1000)}) {
        if (m > l) continue;
        const Real x = to_real(xq);
        const Real oracle = legendre_rodrigues(l, m, xq);
        INFO("l=" << l << " m=" << m << " x=" << static_cast<double>(x));
        CHECK(std::abs(assoc_legendre(l, m, x) - oracle) <= 1e-12 * std::max(Real(1), std::abs(oracle)));
      }
  CHECK_THROWS_AS(assoc_legendre(2, 3, 0.1L), std::invalid_argument);
  CHECK_THROWS_AS(assoc_legendre(2, 1, 1.1L), std::invalid_argument);
}

TEST_CASE("Mehler-Heine convergence", "[legendre]") {
  const std::vector<int> ls{64, 128, 256, 512, 1024};
  for (int m = 0; m <= 3; ++m)
    for (Real r : {1.0L, 2.0L, 4.0L}) {
      const auto pts = mehler_heine_check(m, r, ls);
      INFO("m=" << m << " r=" << static_cast<double>(r));
      CHECK(pts.back().error < 0.02L * std::abs(pts.back().bessel) + 0.005L);
      for (std::size_t k = 1; k < pts.size(); ++k) CHECK(pts[k].error < pts[k - 1].error);
    }
  CHECK_THROWS_AS(mehler_heine_check(6, 1, ls), EnvelopeError);
}

TEST_CASE("Legendre operator limit", "[legendre]") {
  CHECK(legendre_ode_residual(128, 0, 2) / legendre_ode_residual(64, 0, 2) <= 0.5);
  CHECK(legendre_ode_residual(128, 0, 0.5L) < 0.05);
  // normalized residual tends to zero like 1/l
  for (int m = 0; m <= 3; ++m)
    for (Real r : {1.0L, 2.0L, 4.0L}) {
      const Real a = legendre_ode_residual(512, m, r), b = legendre_ode_residual(1024, m, r);
      CHECK(b < a);
      CHECK(b / a == Catch::Approx(0.5).margin(0.05));
    }
  for (int m = 0; m <= 5; ++m)
    for (Real r : {0.5L, 1.0L, 3.0L, 8.0L}) CHECK(bessel_equation_residual(m, r) < 1e-9);
  CHECK_THROWS_AS(legendre_ode_residual(4, 0, 1), EnvelopeError);
}
