#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liegen/numeric/operator_expr.hpp"
#include "liegen/numeric/polynomial.hpp"
#include "liegen/numeric/power_series.hpp"
#include "liegen/numeric/sqrt_rational.hpp"

using namespace liegen;

namespace {

// Independent oracle for H_0..H_n: the three-term recurrence written out on
// plain coefficient vectors, no Polynomial arithmetic involved.
std::vector<std::vector<Rational>> hermite_table(unsigned n) {
  std::vector<std::vector<Rational>> h{{1}, {0, 2}};
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Rational> next(k + 2, 0);
    for (unsigned j = 0; j < h[k].size(); ++j) next[j + 1] += 2 * h[k][j];
    for (unsigned j = 0; j < h[k - 1].size(); ++j) next[j] -= 2 * Rational(k) * h[k - 1][j];
    h.push_back(next);
  }
  return h;
}

Polynomial random_poly(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, static_cast<int>(max_degree));
  Polynomial p;
  const int terms = deg(rng) + 1;
  for (int t = 0; t < terms; ++t) {
    int a = deg(rng), b = deg(rng) % (max_degree - a + 1);
    int c = deg(rng) % (max_degree - a - b + 1);
    p.add_term({std::uint16_t(a), std::uint16_t(b), std::uint16_t(c)}, Rational(coeff(rng), 1 + std::abs(coeff(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial basics", "[numeric][poly]") {
  CHECK(poly_x * poly_x == Polynomial::monomial(1, {2, 0, 0}));
  CHECK((poly_x * poly_x).derivative(Var::x) == 2 * poly_x);

  const Polynomial h2 = 4 * poly_x * poly_x - Polynomial(2);
  const auto table = hermite_table(2);
  CHECK(h2.coefficients_descending() == std::vector<Rational>{table[2][2], table[2][1], table[2][0]});
  CHECK(h2.eval(point_x(1)) == 2);

  SECTION("eval needs every coordinate the polynomial uses") {
    const Polynomial p = poly_x * poly_y;
    CHECK_THROWS_AS(p.eval(point_x(1)), std::invalid_argument);
    CHECK(Polynomial(5).eval(Point{}) == 5);
  }

  SECTION("zero coefficients are never stored") {
    Polynomial p = poly_x + poly_y;
    p -= poly_y;
    CHECK(p.terms().size() == 1);
    CHECK((p - p).is_zero());
  }

  SECTION("substitution composes") {
    // (x - y)^2 expanded by hand
    const Polynomial shifted = (poly_x * poly_x).substitute(Var::x, poly_x - poly_y);
    CHECK(shifted == poly_x * poly_x - 2 * poly_x * poly_y + poly_y * poly_y);
  }

  CHECK((3 * poly_x * poly_x - poly_x + Polynomial(make_rational(1, 2))).str() == "3x^2 - x + 1/2");
}

TEST_CASE("Leibniz rule and linearity on random polynomials", "[numeric][poly][property]") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 6), q = random_poly(rng, 6);
    for (Var v : {Var::x, Var::y, Var::z}) {
      CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
      CHECK((p + q).derivative(v) == p.derivative(v) + q.derivative(v));
    }
    const Point pt = point_xyz(make_rational(1, 3), -2, make_rational(5, 7));
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
  }
}

TEST_CASE("square-root rationals", "[numeric][sqrt]") {
  CHECK(SqrtRational::sqrt(8) == SqrtRational(2, 2));
  CHECK(SqrtRational::sqrt(make_rational(1, 2)) == SqrtRational(make_rational(1, 2), 2));
  CHECK(SqrtRational::sqrt(49).is_rational());
  CHECK((SqrtRational::sqrt(6) * SqrtRational::sqrt(6)).to_rational() == 6);
  CHECK((SqrtRational::sqrt(2) * SqrtRational::sqrt(3)) == SqrtRational::sqrt(6));
  CHECK_THROWS_AS(SqrtRational::sqrt(2) + SqrtRational::sqrt(3), std::domain_error);
  CHECK_THROWS_AS(SqrtRational::sqrt(-1), std::domain_error);
  CHECK((SqrtRational::sqrt(2) - SqrtRational::sqrt(2)).is_zero());
  // large square factor beyond the trial-division bound
  const BigInt p = 1000003;
  CHECK(SqrtRational::sqrt(Rational(p * p * 3)) == SqrtRational(Rational(p), 3));

  SECTION("(sqrt n)^2 = n for n <= 10^6") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(1, 1000000);
    for (int i = 0; i < 300; ++i) {
      const long long n = dist(rng);
      const SqrtRational s = SqrtRational::sqrt(n);
      CHECK((s * s).to_rational() == n);
      CHECK(s.squared() == n);
    }
    for (long long n : {1LL, 2LL, 999999LL, 1000000LL}) CHECK((SqrtRational::sqrt(n) * SqrtRational::sqrt(n)).to_rational() == n);
  }
}

TEST_CASE("Gaussian moments", "[numeric][moment]") {
  CHECK(gaussian_moment(1).coeff == 0);
  CHECK(gaussian_moment(0).coeff == 1);
  // integration by parts: int x^2 e^{-x^2} = 1/2 int e^{-x^2}
  CHECK(gaussian_moment(2).coeff == make_rational(1, 2));
  for (unsigned k = 2; k <= 80; k += 2)
    CHECK(gaussian_moment(k).coeff == Rational(k - 1, 2) * gaussian_moment(k - 2).coeff);
  for (unsigned k = 1; k <= 81; k += 2) CHECK(gaussian_moment(k).coeff == 0);
}

TEST_CASE("power series exponential", "[numeric][series]") {
  constexpr std::size_t K = 12;
  PowerSeries<Polynomial> zero(K);
  CHECK(series_exp(zero, K) == [&] {
    PowerSeries<Polynomial> one(K);
    one[0] = 1;
    return one;
  }());

  PowerSeries<Polynomial> s(K);
  s[1] = 2 * poly_x;
  s[2] = Polynomial(-1);
  const auto e = series_exp(s, K);
  const auto h = hermite_table(3);
  CHECK(e[1] == 2 * poly_x);
  CHECK(e[2] == 2 * poly_x * poly_x - Polynomial(1));  // H_2 / 2!
  CHECK(e[2] * Rational(2) == Polynomial::monomial(h[2][2], {2, 0, 0}) + Polynomial(h[2][0]));

  PowerSeries<Polynomial> bad(K);
  bad[0] = 1;
  CHECK_THROWS_AS(series_exp(bad, K), std::domain_error);
  CHECK_THROWS_AS(PowerSeries<Rational>(3) + PowerSeries<Rational>(4), std::invalid_argument);

  SECTION("exp(a) exp(b) = exp(a + b)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      PowerSeries<Polynomial> a(K), b(K);
      for (std::size_t k = 1; k <= 4; ++k) {
        a[k] = random_poly(rng, 2);
        b[k] = random_poly(rng, 2);
      }
      CHECK(series_exp(a, K) * series_exp(b, K) == series_exp(a + b, K));
    }
  }

  SECTION("composition with the exponential series agrees with series_exp") {
    PowerSeries<Rational> expo(K);
    for (std::size_t k = 0; k <= K; ++k) expo[k] = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
    CHECK(compose(expo, s) == series_exp(s, K));
  }
}

TEST_CASE("normal-ordered operators", "[numeric][operator]") {
  const auto x = OperatorExpr::multiply_by(Var::x);
  const auto d = OperatorExpr::partial(Var::x);
  CHECK(commutator(d, x) == OperatorExpr::identity());
  CHECK(commutator(x, x).is_zero());
  // {x+D, x-D} = 2(x^2 - D^2)
  CHECK(anticommutator(x + d, x - d) == (x * x - d * d) * Rational(2));

  SECTION("composition matches sequential application on monomials") {
    const auto a = x * d * d + OperatorExpr::multiply_by(Var::y) * OperatorExpr::partial(Var::z);
    const auto b = d * x * x - OperatorExpr::partial(Var::y);
    for (const auto& m : monomial_basis(6, {Var::x, Var::y, Var::z})) CHECK((a * b).apply(m) == a.apply(b.apply(m)));
  }

  SECTION("weighted action conjugates the derivative") {
    // D(e^{-x^2/2}) = -x e^{-x^2/2}
    CHECK(d.apply_weighted(Polynomial(1)) == -poly_x);
    CHECK((x - d).apply_weighted(Polynomial(1)) == 2 * poly_x);
  }
}
