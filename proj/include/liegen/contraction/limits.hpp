#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "liegen/contraction/vector_field.hpp"
#include "liegen/euclidean/bessel.hpp"

namespace liegen::contraction {

inline constexpr unsigned kContractionMaxDegree = 6;

/// Sample offsets x0, y0 in {-1, -1/2, 0, 1/2, 1}.
inline std::vector<Rational> contraction_offsets() {
  return {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
}

struct ContractionResidual {
  Rational R;
  Rational lx_residual;  // max |(L'x + P_y) F| over the sample points
  Rational ly_residual;  // max |(L'y - P_x) F|

  Rational max() const { return lx_residual < ly_residual ? ly_residual : lx_residual; }
};

/// f is given in tangent-plane coordinates (x, y, zeta) around the north pole
/// (0, 0, R), i.e. F(x, y, z) = f(x, y, z - R). Residuals of the limits
/// L'x -> -P_y and L'y -> P_x are evaluated exactly at (x0, y0, R).
inline std::vector<ContractionResidual> contraction_residual(const Polynomial& f, const std::vector<Rational>& R_list) {
  if (f.degree() > static_cast<int>(kContractionMaxDegree))
    throw std::invalid_argument("contraction test polynomial degree exceeds 6");
  std::vector<ContractionResidual> out;
  for (const auto& R : R_list) {
    const ScaledBasis b(R);
    const Polynomial F = f.substitute(Var::z, poly_z - Polynomial(R));
    const Polynomial gx = b.lx().apply(F) + vf_py().apply(F);
    const Polynomial gy = b.ly().apply(F) - vf_px().apply(F);
    ContractionResidual res{R, 0, 0};
    for (const auto& x0 : contraction_offsets())
      for (const auto& y0 : contraction_offsets()) {
        const Point p{x0, y0, R};
        const Rational ax = abs(gx.eval(p)), ay = abs(gy.eval(p));
        if (res.lx_residual < ax) res.lx_residual = ax;
        if (res.ly_residual < ay) res.ly_residual = ay;
      }
    out.push_back(res);
  }
  return out;
}

/// Plane test function for the polar ladder limit: value(r, phi) and the image
/// of the matching e2 ladder operator (+P_+ or -P_-) at the same point.
struct PlaneTestFunction {
  std::function<Complex(Real, Real)> value;
  std::function<Complex(Real, Real)> plus_image;   // +P_+ f
  std::function<Complex(Real, Real)> minus_image;  // -P_- f
};

/// J_n(r) e^{i n phi}: +P_+ gives -J_{n+1} e^{i(n+1)phi}, -P_- gives J_{n-1} e^{i(n-1)phi}.
inline PlaneTestFunction bessel_test_function(int n) {
  return {[n](Real r, Real phi) { return bessel::bessel_j(n, Complex(r)) * std::polar(Real(1), n * phi); },
          [n](Real r, Real phi) { return -bessel::bessel_j(n + 1, Complex(r)) * std::polar(Real(1), (n + 1) * phi); },
          [n](Real r, Real phi) { return bessel::bessel_j(n - 1, Complex(r)) * std::polar(Real(1), (n - 1) * phi); }};
}

inline PlaneTestFunction constant_test_function() {
  return {[](Real, Real) { return Complex(1); }, [](Real, Real) { return Complex(0); },
          [](Real, Real) { return Complex(0); }};
}

inline constexpr Real kLadderLimitMinR = 0.5L, kLadderLimitMaxR = 5;
inline constexpr Real kLadderLimitStep = 1e-4L;

enum class LadderSign { plus, minus };

struct LadderLimitResidual {
  Real R = 0;
  Real residual = 0;
};

/// (L_+- / R) in spherical form, e^{+-i phi}(d/dtheta +- i cot(theta) d/dphi),
/// applied by central differences to g(theta, phi) = f(R tan(theta), phi) at
/// theta = arctan(r / R), against +-P_+- f at (r, phi). The theta step is
/// h / R since g varies on the angular scale 1 / R.
inline std::vector<LadderLimitResidual> polar_ladder_limit(const PlaneTestFunction& f, LadderSign sign, Real r,
                                                           Real phi, const std::vector<Real>& R_list,
                                                           Real h = kLadderLimitStep) {
  if (r < kLadderLimitMinR || r > kLadderLimitMaxR) throw std::invalid_argument("ladder limit needs 0.5 <= r <= 5");
  const Real s = sign == LadderSign::plus ? 1 : -1;
  const Complex i(0, 1);
  std::vector<LadderLimitResidual> out;
  for (Real R : R_list) {
    if (!(R > 0)) throw std::invalid_argument("scale R must be positive");
    auto g = [&](Real theta, Real ph) { return f.value(R * std::tan(theta), ph); };
    const Real theta = std::atan(r / R), ht = h / R;
    const Complex d_theta = (g(theta + ht, phi) - g(theta - ht, phi)) / (2 * ht);
    const Complex d_phi = (g(theta, phi + h) - g(theta, phi - h)) / (2 * h);
    const Complex lhs = std::polar(Real(1), s * phi) * (d_theta + s * i / std::tan(theta) * d_phi) / R;
    const Complex rhs = sign == LadderSign::plus ? f.plus_image(r, phi) : f.minus_image(r, phi);
    out.push_back({R, std::abs(lhs - rhs)});
  }
  return out;
}

inline std::vector<LadderLimitResidual> polar_ladder_limit(int n, Real r, Real phi, const std::vector<Real>& R_list,
                                                           LadderSign sign = LadderSign::plus) {
  return polar_ladder_limit(bessel_test_function(n), sign, r, phi, R_list);
}

}  // namespace liegen::contraction
