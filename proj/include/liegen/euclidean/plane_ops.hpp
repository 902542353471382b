#pragma once

#include "liegen/numeric/operator_expr.hpp"
#include "liegen/numeric/polynomial.hpp"

namespace liegen::bessel {

/// P_x = d/dx, P_y = d/dy, L_z = x d/dy - y d/dx on functions of (x, y).
inline OperatorExpr plane_px() { return OperatorExpr::partial(Var::x); }
inline OperatorExpr plane_py() { return OperatorExpr::partial(Var::y); }
inline OperatorExpr plane_lz() {
  return OperatorExpr::multiply_by(Var::x) * OperatorExpr::partial(Var::y) -
         OperatorExpr::multiply_by(Var::y) * OperatorExpr::partial(Var::x);
}

/// Residuals of [P_x, -P_y] = 0, [L_z, P_x] = -P_y, [-P_y, L_z] = P_x, both
/// as normal-ordered operators and as actions on bivariate monomials.
struct PlaneRelationResidual {
  OperatorExpr px_py;
  OperatorExpr lz_px;
  OperatorExpr py_lz;
  std::size_t monomials_checked = 0;
  std::size_t monomial_failures = 0;

  bool is_zero() const { return px_py.is_zero() && lz_px.is_zero() && py_lz.is_zero() && monomial_failures == 0; }
};

inline PlaneRelationResidual plane_relation_check(unsigned max_degree = 8) {
  const auto px = plane_px(), py = plane_py(), lz = plane_lz();
  const auto neg_py = py * Rational(-1);
  PlaneRelationResidual r;
  r.px_py = commutator(px, neg_py);
  r.lz_px = commutator(lz, px) - neg_py;
  r.py_lz = commutator(neg_py, lz) - px;
  for (const auto& m : monomial_basis(max_degree, {Var::x, Var::y})) {
    ++r.monomials_checked;
    const bool ok = (px.apply(neg_py.apply(m)) - neg_py.apply(px.apply(m))).is_zero() &&
                    lz.apply(px.apply(m)) - px.apply(lz.apply(m)) == neg_py.apply(m) &&
                    neg_py.apply(lz.apply(m)) - lz.apply(neg_py.apply(m)) == px.apply(m);
    if (!ok) ++r.monomial_failures;
  }
  return r;
}

}  // namespace liegen::bessel
