#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "liegen/euclidean/bessel.hpp"
#include "liegen/euclidean/cylfunc.hpp"
#include "liegen/euclidean/flow.hpp"
#include "liegen/euclidean/identities.hpp"
#include "liegen/euclidean/plane_ops.hpp"
#include "liegen/groups/euclidean_group.hpp"

using namespace liegen;
using namespace liegen::bessel;
using namespace liegen::groups;

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

// J_n(z) = (1/2pi) int_0^{2pi} cos(n tau - z sin tau) d tau. The integrand is
// periodic and entire, so the plain trapezoid rule converges geometrically.
Complex bessel_integral(int n, Complex z, int points = 512) {
  Complex sum = 0;
  for (int k = 0; k < points; ++k) {
    const Real tau = 2 * kPi * k / points;
    sum += std::cos(Real(n) * tau - z * std::sin(tau));
  }
  return sum / Real(points);
}

}  // namespace

TEST_CASE("series values at the origin", "[bessel]") {
  CHECK(bessel_j(0, Real(0)) == 1);
  CHECK(bessel_j(3, Real(0)) == 0);
  CHECK(bessel_j(-2, Real(0)) == 0);
}

TEST_CASE("series against the integral representation", "[bessel]") {
  for (int n = -20; n <= 20; n += 3)
    for (Real x : {0.05L, 0.5L, 1.0L, 2.5L, 7.0L, 13.0L, 20.0L}) {
      INFO("n=" << n << " x=" << static_cast<double>(x));
      // ascending-series cancellation grows like e^x times the unit roundoff
      const Real tol = std::max(1e-14L, 5e-21L * std::exp(x));
      CHECK(std::abs(bessel_j(n, x) - bessel_integral(n, x).real()) < tol);
    }
  for (Complex z : {Complex(1, 1), Complex(-2, 0.5), Complex(0.3, -4), Complex(5, 5)})
    for (int n : {0, 1, 4, -3}) CHECK(std::abs(bessel_j(n, z) - bessel_integral(n, z)) < 1e-13);
}

TEST_CASE("J0 zero located by bisection of the series", "[bessel]") {
  Real lo = 2, hi = 3;
  for (int it = 0; it < 80; ++it) {
    const Real mid = (lo + hi) / 2;
    (bessel_j(0, lo) * bessel_j(0, mid) <= 0 ? hi : lo) = mid;
  }
  CHECK(std::abs(bessel_j(0, (lo + hi) / 2)) < 1e-10);
  CHECK(std::abs((lo + hi) / 2 - 2.404825557L) < 1e-9);
}

TEST_CASE("termwise derivatives", "[bessel]") {
  CHECK(bessel_derivatives(0, 0).first == Complex(0));
  CHECK(std::abs(bessel_derivatives(1, Complex(1e-9L)).first - Complex(0.5L)) < 1e-15);
  CHECK(std::abs(bessel_derivatives(-1, Complex(0)).first - Complex(-0.5L)) < 1e-18);

  const auto [j, dj, d2j] = bessel_derivatives(2, Complex(1.7L));
  const Real z = 1.7L;
  CHECK(std::abs(d2j + dj / z + (1 - 4 / (z * z)) * j) < 1e-12);

  // central differences of the value series
  const Real h = 1e-4L;
  for (int n : {0, 3, -4})
    for (Real x : {0.4L, 3.3L, 11.0L}) {
      const auto d = bessel_derivatives(n, Complex(x));
      const Real fd1 = (bessel_j(n, x + h) - bessel_j(n, x - h)) / (2 * h);
      const Real fd2 = (bessel_j(n, x + h) - 2 * bessel_j(n, x) + bessel_j(n, x - h)) / (h * h);
      CHECK(std::abs(d.first.real() - fd1) < 1e-8);
      CHECK(std::abs(d.second.real() - fd2) < 1e-6);
    }
}

TEST_CASE("doubling the term budget changes no value", "[bessel]") {
  BesselEval doubled;
  doubled.max_terms *= 2;
  doubled.epsilon = 1e-19L;
  for (int n = 0; n <= 20; n += 4)
    for (Real x = 0.5L; x <= 30; x += 2.5L) {
      const Complex a = bessel_j(n, Complex(x)), b = bessel_j(n, Complex(x), doubled);
      CHECK(std::abs(a - b) <= 1e-13 * std::max(Real(1e-3), std::abs(b)));
    }
}

TEST_CASE("evaluator envelope", "[bessel]") {
  CHECK_THROWS_AS(bessel_j(21, Real(1)), EnvelopeError);
  CHECK_THROWS_AS(bessel_j(0, Real(31)), EnvelopeError);
  CHECK_THROWS_AS(bessel_derivatives(0, Complex(0, 30.5L)), EnvelopeError);
  CHECK_NOTHROW(bessel_j(-20, Complex(0, 30)));
}

TEST_CASE("polar ladder operators on cylindrical functions", "[cylfunc]") {
  CHECK(apply_polar_op(PolarOp::Lz, CylFunc{{0, 1}}).is_zero());
  CHECK(apply_polar_op(PolarOp::Pplus, CylFunc{{2, 1}}) == CylFunc{{3, -1}});
  const CylFunc f{{-2, Complex(1, 2)}, {0, 3}, {5, Complex(0, -1)}};
  const auto pm = apply_polar_op(PolarOp::Pplus, apply_polar_op(PolarOp::Pminus, f));
  const auto mp = apply_polar_op(PolarOp::Pminus, apply_polar_op(PolarOp::Pplus, f));
  CHECK(pm == f);
  CHECK(mp == f);
  CHECK(apply_polar_op(PolarOp::Lz, f).coefficient(5) == Complex(0, -5));
}

TEST_CASE("ladder action matches finite differences", "[cylfunc]") {
  CHECK(polar_numeric_crosscheck(PolarOp::Pplus, 0, 1, 0) < 1e-6);
  CHECK(polar_numeric_crosscheck(PolarOp::Pplus, 3, 5, 1.1L) < 1e-6);
  CHECK(polar_numeric_crosscheck(PolarOp::Pminus, 1, 2, kPi / 3) < 1e-6);
  CHECK_THROWS_AS(polar_numeric_crosscheck(PolarOp::Pplus, 0, 0.1L, 0), std::invalid_argument);

  // second-order convergence in the step
  for (int n : {0, 2, -3})
    for (Real r : {0.5L, 3.0L, 9.0L}) {
      const Real coarse = polar_numeric_crosscheck(PolarOp::Pplus, n, r, 0.4L, 1e-3L);
      const Real fine = polar_numeric_crosscheck(PolarOp::Pplus, n, r, 0.4L, 5e-4L);
      INFO("n=" << n << " r=" << static_cast<double>(r));
      CHECK(std::abs(fine / coarse - 0.25L) < 0.1);
    }
}

TEST_CASE("Bessel identities on the grid", "[bessel]") {
  CHECK(verify_bessel_identity(BesselIdentity::recursion_A7, 1, 2) < 1e-10);
  CHECK(verify_bessel_identity(BesselIdentity::diffrel_A10, 0, 3) < 1e-10);
  CHECK(verify_bessel_identity(BesselIdentity::ode_A6, 0, 0.1L) < 1e-9);
  for (auto which : {BesselIdentity::ode_A6, BesselIdentity::recursion_A7, BesselIdentity::diffrel_A8,
                     BesselIdentity::diffrel_A9, BesselIdentity::diffrel_A10})
    for (int n = -10; n <= 10; ++n)
      for (Real r : {0.1L, 0.5L, 1.0L, 2.0L, 5.0L, 10.0L, 20.0L}) {
        INFO(identity_name(which) << " n=" << n << " r=" << static_cast<double>(r));
        CHECK(verify_bessel_identity(which, n, r) < 1e-10);
      }
  CHECK_THROWS_AS(verify_bessel_identity(BesselIdentity::ode_A6, 11, 1), EnvelopeError);
  CHECK_THROWS_AS(verify_bessel_identity(BesselIdentity::ode_A6, 0, 0.05L), EnvelopeError);
}

TEST_CASE("translation generating function", "[genfunc]") {
  // with t = 0 both sides reduce to e^{in phi} J_n(r)
  CHECK(genfunc_a11_check(2, 3, 0.4L, 0) < 1e-16);

  // the printed closed side, recomputed here with the integral oracle
  auto printed_oracle = [](int n, Real r, Real phi, Complex t) {
    const Complex i(0, 1);
    const Complex u = std::sqrt(r * r + Real(2) * t * (i * r * std::cos(phi) - r * std::sin(phi)));
    Complex rhs = 0, w = 1;
    for (int m = 0; m < 30; ++m, w *= -t / Real(m)) rhs += w * std::exp(i * Real((n + m) * phi)) * bessel_integral(n + m, r);
    return std::abs(std::exp(i * Real(n) * phi) * bessel_integral(n, u) - rhs);
  };
  for (auto [n, r, phi, t] : {std::tuple{0, 2.0L, 0.7L, Complex(0.3L)}, std::tuple{2, 1.0L, 0.0L, Complex(0, 0.1L)},
                              std::tuple{1, 5.0L, kPi / 3, Complex(-0.5L)}}) {
    const Real ours = genfunc_a11_check(n, r, phi, t);
    CHECK(std::abs(ours - printed_oracle(n, r, phi, t)) < 1e-12);
    // the printed closed side does not match the series side away from t = 0
    CHECK(ours > 1e-3);
  }

  for (int n : {0, 1, 2, -2, 5})
    for (Real r : {1.0L, 2.0L, 5.0L, 10.0L})
      for (Real phi : {0.0L, 0.7L, kPi / 3})
        for (Complex t : {Complex(0.5L), Complex(-0.5L), Complex(0, 0.5L), Complex(0, -0.5L), Complex(0.2L, 0.3L)})
          CHECK(genfunc_a11_check(n, r, phi, t, 30, GenfuncForm::corrected) < 1e-12);
}

TEST_CASE("generating function domain and branch guard", "[genfunc]") {
  CHECK_THROWS_AS(genfunc_a11_check(0, 1, 0, Complex(0, 0.5L)), BranchError);
  CHECK_THROWS_AS(genfunc_a11_check(0, 1, 0, Complex(0.6L)), EnvelopeError);
  CHECK_THROWS_AS(genfunc_a11_check(0, 0.4L, 0, Complex(0.1L)), EnvelopeError);
  CHECK_THROWS_AS(genfunc_a11_check(0, 1, 0, Complex(0.1L), 29), std::invalid_argument);
}

TEST_CASE("flow generating-function diagnostic", "[genfunc]") {
  const auto zero = genfunc_a12_diagnostic(1, 2, 0.5L, 0);
  CHECK(zero.residual_corrected_form < 1e-16);
  CHECK(zero.residual_exact_flow < 1e-16);

  const auto rep = genfunc_a12_diagnostic(0, 2, 0.5L, 0.2L);
  CHECK(std::isfinite(static_cast<double>(rep.residual_paper_form)));
  CHECK(std::isfinite(static_cast<double>(rep.residual_corrected_form)));
  // the exact complex flow reproduces the series side
  CHECK(rep.residual_exact_flow < 1e-12);
  const auto rep2 = genfunc_a12_diagnostic(1, 3, 1, 0.1L);
  CHECK((std::string(rep2.smaller_residual()) == "paper_form" || std::string(rep2.smaller_residual()) == "corrected_form"));
}

TEST_CASE("flow integration", "[flow]") {
  const auto still = flow_solve(2, 0.5L, 0, 10);
  CHECK(still.endpoint.r == Complex(2));
  CHECK(still.endpoint.phi == Complex(0.5L));
  CHECK(still.endpoint.q == Complex(1));

  const auto run = flow_solve(2, 0.5L, 0.3L);
  for (const auto& s : run.trajectory) REQUIRE(s.q == Complex(1));
  const auto [r_exact, phi_exact] = flow_exact(2, 0.5L, 0.3L);
  CHECK(std::abs(run.endpoint.r - r_exact) < 1e-12);
  CHECK(std::abs(run.endpoint.phi - phi_exact) < 1e-12);
  CHECK(std::isfinite(static_cast<double>(run.discrepancy_r)));
  CHECK(run.closed_r == Catch::Approx(std::sqrt(2 * 2 * 0.5L * 0.3L + 4)));

  // conserved quantity r e^{i phi}
  for (const auto& s : run.trajectory) CHECK(std::abs(s.r * std::exp(Complex(0, 1) * s.phi) - std::polar(Real(2), Real(0.5L))) < 1e-12);

  CHECK_THROWS_AS(flow_solve(0, 0.5L, 1), std::invalid_argument);
  CHECK_THROWS_AS(flow_solve(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(flow_solve(1, 0.5L, 1, 0), std::invalid_argument);
}

TEST_CASE("plane operators represent e2", "[plane]") {
  const auto r = plane_relation_check(8);
  CHECK(r.is_zero());
  CHECK(r.monomials_checked == 45);

  // translations commute exactly
  for (int a = -3; a <= 3; ++a)
    for (int b = -2; b <= 2; ++b) {
      const auto tx = e2_exp_translation<Rational>(Rational(a, 2), Axis::x);
      const auto ty = e2_exp_translation<Rational>(Rational(b, 3), Axis::y);
      CHECK(tx * ty == ty * tx);
    }
}
