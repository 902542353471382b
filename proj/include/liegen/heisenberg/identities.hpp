#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "liegen/heisenberg/discrete_matrix.hpp"
#include "liegen/heisenberg/hermite.hpp"

namespace liegen::hermite {

enum class HermiteIdentity { ode_A2, recursion_A3, diffrel_A4, anticommutator, orthonormality };

inline const char* identity_name(HermiteIdentity which) {
  switch (which) {
    case HermiteIdentity::ode_A2: return "ode_A2";
    case HermiteIdentity::recursion_A3: return "recursion_A3";
    case HermiteIdentity::diffrel_A4: return "diffrel_A4";
    case HermiteIdentity::anticommutator: return "anticommutator";
    case HermiteIdentity::orthonormality: return "orthonormality";
  }
  return "?";
}

/// Exact difference of the two sides of an identity; passing means every
/// component is identically zero.
struct HermiteResidual {
  Polynomial polynomial;  // polynomial-valued identities
  Rational scalar = 0;    // integral identities (sum of squared deviations)
  OperatorExpr operator_residual;

  bool is_zero() const { return polynomial.is_zero() && scalar == 0 && operator_residual.is_zero(); }
};

/// (1/2){b-, b+} = {a-, a+} acting on the polynomial part of p w.
inline Polynomial anticommutator_action(const Polynomial& p) {
  const GaussianWeighted f{p};
  const auto mp = apply_ladder(LadderKind::b_minus, apply_ladder(LadderKind::b_plus, f));
  const auto pm = apply_ladder(LadderKind::b_plus, apply_ladder(LadderKind::b_minus, f));
  return (mp.p + pm.p) * Rational(1, 2);
}

/// {a-, a+} - (x^2 - D^2) as a normal-ordered operator; zero when the
/// operator identity holds.
inline OperatorExpr anticommutator_operator_residual() {
  const auto am = ladder_expr(LadderKind::b_minus), ap = ladder_expr(LadderKind::b_plus);
  const auto x = OperatorExpr::multiply_by(Var::x), d = OperatorExpr::partial(Var::x);
  return anticommutator(am, ap) * Rational(1, 2) - (x * x - d * d);
}

/// Eigenvalue of {a-, a+} on <x|n>, read off the leading coefficient and
/// checked for exact proportionality.
inline Rational anticommutator_eigenvalue(unsigned n, unsigned max_n = kDefaultMaxN) {
  const Polynomial h = hermite_rodrigues(n, max_n);
  const Polynomial image = anticommutator_action(h);
  const Rational lambda = image.coefficient_x(n) / h.coefficient_x(n);
  if (!(image - h * lambda).is_zero()) throw std::logic_error("<x|n> is not an eigenfunction of {a-,a+}");
  return lambda;
}

inline HermiteResidual verify_hermite_identity(HermiteIdentity which, unsigned n, unsigned max_n = kDefaultMaxN) {
  HermiteResidual r;
  const Polynomial h = hermite_rodrigues(n, max_n);
  switch (which) {
    case HermiteIdentity::ode_A2:
      // H'' - 2x H' + 2n H
      r.polynomial = h.derivative(Var::x, 2) - 2 * h.derivative(Var::x).times(Var::x) + h * Rational(2 * n);
      break;
    case HermiteIdentity::recursion_A3: {
      // H_{n+1} - 2x H_n + 2n H_{n-1}; the n = 0 case has no H_{-1} term
      const Polynomial next = hermite_rodrigues(n + 1, max_n + 1);
      r.polynomial = next - 2 * h.times(Var::x);
      if (n > 0) r.polynomial += hermite_rodrigues(n - 1, max_n) * Rational(2 * n);
      break;
    }
    case HermiteIdentity::diffrel_A4:
      r.polynomial = h.derivative(Var::x);
      if (n > 0) r.polynomial -= hermite_rodrigues(n - 1, max_n) * Rational(2 * n);
      break;
    case HermiteIdentity::anticommutator:
      r.polynomial = anticommutator_action(h) - h * Rational(2 * n + 1);
      r.operator_residual = anticommutator_operator_residual();
      break;
    case HermiteIdentity::orthonormality:
      // sum over m <= n of (<n|m> - delta)^2, exact because squares of the
      // overlaps are rational
      for (unsigned m = 0; m <= n; ++m) {
        const SqrtRational ov = overlap(mixed_basis(n, max_n), mixed_basis(m, max_n));
        const SqrtRational dev = m == n ? ov - SqrtRational(1) : ov;
        r.scalar += dev.squared();
      }
      break;
  }
  return r;
}

/// Residuals of the h3 relations [X,Y] = [Y,Z] = 0, [X,Z] = Y under
/// t(X) = a-, t(Y) = I, t(Z) = a+. Computed with the scaled operators:
/// [b-, b+] = 2 [a-, a+] must equal 2 I.
struct LadderRepresentationResidual {
  OperatorExpr xz_minus_y;  // [a-, a+] - I
  OperatorExpr xy;          // [a-, I]
  OperatorExpr yz;          // [I, a+]
  /// Same relations on the Gaussian-weighted monomials x^k w, k <= max_degree.
  bool action_consistent = true;

  bool is_zero() const { return xz_minus_y.is_zero() && xy.is_zero() && yz.is_zero() && action_consistent; }
};

inline LadderRepresentationResidual ladder_representation_check(unsigned max_degree = 12) {
  const auto bm = ladder_expr(LadderKind::b_minus), bp = ladder_expr(LadderKind::b_plus);
  const auto id = OperatorExpr::identity();
  LadderRepresentationResidual r;
  r.xz_minus_y = commutator(bm, bp) * Rational(1, 2) - id;
  r.xy = commutator(bm, id);
  r.yz = commutator(id, bp);
  for (unsigned k = 0; k <= max_degree; ++k) {
    const GaussianWeighted f{Polynomial::monomial(1, {static_cast<std::uint16_t>(k), 0, 0})};
    const auto mp = apply_ladder(LadderKind::b_minus, apply_ladder(LadderKind::b_plus, f));
    const auto pm = apply_ladder(LadderKind::b_plus, apply_ladder(LadderKind::b_minus, f));
    // [b-, b+] (p w) = 2 p w
    if (!((mp.p - pm.p) * Rational(1, 2) == f.p)) r.action_consistent = false;
    // the operator form acting through the weight agrees with the ladder table
    if (!(bp.apply_weighted(f.p) == apply_ladder(LadderKind::b_plus, f).p)) r.action_consistent = false;
    if (!(bm.apply_weighted(f.p) == apply_ladder(LadderKind::b_minus, f).p)) r.action_consistent = false;
  }
  return r;
}

/// a+ <x|n> computed through the operator, against sqrt(n+1) <x|n+1> from the
/// number basis. Both are c * H_{n+1} w; returns the exact coefficient gap.
inline SqrtRational raising_consistency_residual(unsigned n, unsigned max_n = kDefaultMaxN) {
  const auto state = mixed_basis(n, max_n);
  const auto next = mixed_basis(n + 1, max_n + 1);
  const ScaledState raised = apply_a(Ladder::raise, {state.f, 0});
  if (!(raised.f == next.f)) throw std::logic_error("b+ H_n w differs from H_{n+1} w");
  // continuous side: (1/sqrt 2) * sqrt(N_n) ; discrete side: sqrt(n+1) * sqrt(N_{n+1})
  const SqrtRational continuous = raised.factor() * SqrtRational::sqrt(state.norm.squared_value);
  const SqrtRational discrete =
      SqrtRational::sqrt(static_cast<long long>(n + 1)) * SqrtRational::sqrt(next.norm.squared_value);
  return continuous - discrete;
}

}  // namespace liegen::hermite
