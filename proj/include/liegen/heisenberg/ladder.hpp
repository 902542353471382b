#pragma once

#include <string>

#include "liegen/numeric/operator_expr.hpp"
#include "liegen/numeric/polynomial.hpp"
#include "liegen/numeric/sqrt_rational.hpp"

namespace liegen::hermite {

/// p(x) * exp(-x^2/2), stored through its polynomial factor p.
struct GaussianWeighted {
  Polynomial p;

  friend bool operator==(const GaussianWeighted&, const GaussianWeighted&) = default;
  std::string str() const { return "(" + p.str() + ") w"; }

  Real eval(Real x) const { return p.eval_real(x) * std::exp(-x * x / 2); }
};

/// Scaled ladder operators b- = x + D and b+ = x - D (so a-+ = b-+ / sqrt 2),
/// plus the position and derivative operators.
enum class LadderKind { b_minus, b_plus, position, derivative, identity };

/// b-(p w) = p' w, b+(p w) = (2xp - p') w, x(p w) = xp w, D(p w) = (p' - xp) w.
inline GaussianWeighted apply_ladder(LadderKind op, const GaussianWeighted& f) {
  switch (op) {
    case LadderKind::b_minus: return {f.p.derivative(Var::x)};
    case LadderKind::b_plus: return {f.p.times(Var::x) * 2 - f.p.derivative(Var::x)};
    case LadderKind::position: return {f.p.times(Var::x)};
    case LadderKind::derivative: return {f.p.derivative(Var::x) - f.p.times(Var::x)};
    case LadderKind::identity: return f;
  }
  return f;
}

/// The same operators as normal-ordered differential expressions in x.
inline OperatorExpr ladder_expr(LadderKind op) {
  const auto x = OperatorExpr::multiply_by(Var::x);
  const auto d = OperatorExpr::partial(Var::x);
  switch (op) {
    case LadderKind::b_minus: return x + d;
    case LadderKind::b_plus: return x - d;
    case LadderKind::position: return x;
    case LadderKind::derivative: return d;
    case LadderKind::identity: return OperatorExpr::identity();
  }
  return OperatorExpr::identity();
}

/// A Gaussian-weighted function times (sqrt 2)^sqrt2_power. Applying a-+
/// applies b-+ and lowers the power by one, keeping coefficients rational.
struct ScaledState {
  GaussianWeighted f;
  int sqrt2_power = 0;

  /// The accumulated scalar (sqrt 2)^sqrt2_power as an exact value.
  SqrtRational factor() const {
    const int k = sqrt2_power;
    const Rational two_pow = k >= 0 ? Rational(BigInt(1) << k) : Rational(BigInt(1), BigInt(1) << -k);
    return SqrtRational::sqrt(two_pow);
  }
};

enum class Ladder { lower, raise };

inline ScaledState apply_a(Ladder op, const ScaledState& s) {
  return {apply_ladder(op == Ladder::lower ? LadderKind::b_minus : LadderKind::b_plus, s.f), s.sqrt2_power - 1};
}

}  // namespace liegen::hermite
