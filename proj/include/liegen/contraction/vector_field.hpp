#pragma once

#include <array>
#include <string>

#include "liegen/numeric/polynomial.hpp"

namespace liegen::contraction {

/// c_x d/dx + c_y d/dy + c_z d/dz with polynomial coefficients.
class VectorFieldOp {
 public:
  VectorFieldOp() = default;
  VectorFieldOp(Polynomial cx, Polynomial cy, Polynomial cz) : c_{std::move(cx), std::move(cy), std::move(cz)} {}

  const Polynomial& coefficient(Var v) const { return c_[index(v)]; }

  Polynomial apply(const Polynomial& f) const {
    Polynomial out;
    for (Var v : {Var::x, Var::y, Var::z})
      if (!c_[index(v)].is_zero()) out += c_[index(v)] * f.derivative(v);
    return out;
  }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

  friend VectorFieldOp operator+(const VectorFieldOp& a, const VectorFieldOp& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
  }
  friend VectorFieldOp operator-(const VectorFieldOp& a, const VectorFieldOp& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
  }
  friend VectorFieldOp operator*(const Rational& s, const VectorFieldOp& a) {
    return {a.c_[0] * s, a.c_[1] * s, a.c_[2] * s};
  }
  friend VectorFieldOp operator-(const VectorFieldOp& a) { return Rational(-1) * a; }
  friend bool operator==(const VectorFieldOp&, const VectorFieldOp&) = default;

  std::string str() const {
    std::string out;
    for (Var v : {Var::x, Var::y, Var::z}) {
      if (c_[index(v)].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[index(v)].str() + ") d/d" + var_name(v);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<Polynomial, 3> c_;
};

/// [A, B] has components A(b_i) - B(a_i).
inline VectorFieldOp vf_commutator(const VectorFieldOp& a, const VectorFieldOp& b) {
  return {a.apply(b.coefficient(Var::x)) - b.apply(a.coefficient(Var::x)),
          a.apply(b.coefficient(Var::y)) - b.apply(a.coefficient(Var::y)),
          a.apply(b.coefficient(Var::z)) - b.apply(a.coefficient(Var::z))};
}

inline VectorFieldOp vf_px() { return {1, 0, 0}; }
inline VectorFieldOp vf_py() { return {0, 1, 0}; }
inline VectorFieldOp vf_lx() { return {0, -1 * poly_z, poly_y}; }  // y d/dz - z d/dy
inline VectorFieldOp vf_ly() { return {poly_z, 0, -1 * poly_x}; }  // z d/dx - x d/dz
inline VectorFieldOp vf_lz() { return {-1 * poly_y, poly_x, 0}; }  // x d/dy - y d/dx

/// Jacobi sum [a,[b,c]] + [b,[c,a]] + [c,[a,b]].
inline VectorFieldOp jacobi_sum(const VectorFieldOp& a, const VectorFieldOp& b, const VectorFieldOp& c) {
  return vf_commutator(a, vf_commutator(b, c)) + vf_commutator(b, vf_commutator(c, a)) +
         vf_commutator(c, vf_commutator(a, b));
}

/// True when A(B f) - B(A f) equals [A, B] f on every monomial of degree <= d.
inline bool commutator_matches_action(const VectorFieldOp& a, const VectorFieldOp& b, unsigned max_degree = 6) {
  const VectorFieldOp c = vf_commutator(a, b);
  for (const auto& m : monomial_basis(max_degree, {Var::x, Var::y, Var::z}))
    if (!(a.apply(b.apply(m)) - b.apply(a.apply(m)) == c.apply(m))) return false;
  return true;
}

/// L'_x = L_x / R, L'_y = L_y / R, L'_z = L_z.
struct ScaledBasis {
  Rational R;

  explicit ScaledBasis(Rational r) : R(std::move(r)) {
    if (R <= 0) throw std::invalid_argument("scale R must be positive");
  }
  VectorFieldOp lx() const { return (Rational(1) / R) * vf_lx(); }
  VectorFieldOp ly() const { return (Rational(1) / R) * vf_ly(); }
  VectorFieldOp lz() const { return vf_lz(); }
};

/// Residual operators of [L'x, L'y] = -L'z / R^2, [L'y, L'z] = -L'x,
/// [L'z, L'x] = -L'y.
struct ScaledCommutatorReport {
  Rational R;
  VectorFieldOp xy;
  VectorFieldOp yz;
  VectorFieldOp zx;
  bool action_consistent = true;  // same relations on monomials, degree <= 6

  bool is_zero() const { return xy.is_zero() && yz.is_zero() && zx.is_zero() && action_consistent; }
};

inline ScaledCommutatorReport scaled_commutator_check(const Rational& R, unsigned max_degree = 6) {
  const ScaledBasis b(R);
  ScaledCommutatorReport rep{R, {}, {}, {}, true};
  rep.xy = vf_commutator(b.lx(), b.ly()) + (Rational(1) / (R * R)) * b.lz();
  rep.yz = vf_commutator(b.ly(), b.lz()) + b.lx();
  rep.zx = vf_commutator(b.lz(), b.lx()) + b.ly();
  rep.action_consistent = commutator_matches_action(b.lx(), b.ly(), max_degree) &&
                          commutator_matches_action(b.ly(), b.lz(), max_degree) &&
                          commutator_matches_action(b.lz(), b.lx(), max_degree);
  return rep;
}

/// The e2 relations obtained after the contraction, on {-P_y, P_x, L_z}:
/// [-P_y, P_x] = 0, [P_x, L_z] = P_y, [L_z, -P_y] = -P_x.
struct ContractedRelations {
  VectorFieldOp py_px;
  VectorFieldOp px_lz;
  VectorFieldOp lz_py;

  bool is_zero() const { return py_px.is_zero() && px_lz.is_zero() && lz_py.is_zero(); }
};

inline ContractedRelations contracted_relations() {
  const auto px = vf_px(), py = vf_py(), lz = vf_lz();
  return {vf_commutator(-py, px), vf_commutator(px, lz) - py, vf_commutator(lz, -py) + px};
}

}  // namespace liegen::contraction
