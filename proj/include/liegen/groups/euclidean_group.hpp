#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "liegen/groups/matrix3.hpp"

namespace liegen::groups {

inline constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;

/// Angle reduced into [0, 2pi).
inline Real wrap_angle(Real theta) {
  Real t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

/// Rigid motion of the plane: rotate by theta, then translate by (x, y).
/// theta is normalized into [0, 2pi) on construction.
class E2Element {
 public:
  E2Element() = default;
  E2Element(Real x, Real y, Real theta) : x_(x), y_(y), theta_(wrap_angle(theta)) {}

  static E2Element identity() { return {}; }

  Real x() const { return x_; }
  Real y() const { return y_; }
  Real theta() const { return theta_; }

  /// [[cos, -sin, x], [sin, cos, y], [0, 0, 1]]
  Matrix3<Real> matrix() const {
    const Real c = std::cos(theta_), s = std::sin(theta_);
    Matrix3<Real> m = Matrix3<Real>::identity();
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    m(0, 2) = x_;
    m(1, 2) = y_;
    return m;
  }

 private:
  Real x_ = 0, y_ = 0, theta_ = 0;
};

inline std::array<Real, 2> e2_apply(const E2Element& g, std::array<Real, 2> p) {
  const Real c = std::cos(g.theta()), s = std::sin(g.theta());
  return {p[0] * c - p[1] * s + g.x(), p[0] * s + p[1] * c + g.y()};
}

inline E2Element e2_compose(const E2Element& g, const E2Element& h) {
  const auto t = e2_apply(E2Element(0, 0, g.theta()), {h.x(), h.y()});
  return {g.x() + t[0], g.y() + t[1], g.theta() + h.theta()};
}

/// Rotate back, then undo the translation.
inline E2Element e2_inverse(const E2Element& g) {
  const auto t = e2_apply(E2Element(0, 0, -g.theta()), {-g.x(), -g.y()});
  return {t[0], t[1], -g.theta()};
}

enum class Axis { x, y };

/// Translation generators P_x, P_y and the rotation generator of e2 in the
/// 3x3 representation. P_x^2 = P_y^2 = 0.
template <typename T = Rational>
Matrix3<T> e2_generator_Px() { return Matrix3<T>::unit(0, 2); }
template <typename T = Rational>
Matrix3<T> e2_generator_Py() { return Matrix3<T>::unit(1, 2); }
template <typename T = Rational>
Matrix3<T> e2_generator_rotation() {
  Matrix3<T> m = Matrix3<T>::zero();
  m(0, 1) = T(-1);
  m(1, 0) = T(1);
  return m;
}

/// exp(t P_axis) = I + t P_axis exactly, because the generator is nilpotent.
template <typename T>
Matrix3<T> e2_exp_translation(const T& t, Axis axis) {
  const auto P = axis == Axis::x ? e2_generator_Px<T>() : e2_generator_Py<T>();
  return Matrix3<T>::identity() + t * P;
}

/// Closed-form exponential of theta times the rotation generator.
inline Matrix3<Real> e2_exp_rotation(Real theta) { return E2Element(0, 0, theta).matrix(); }

}  // namespace liegen::groups
