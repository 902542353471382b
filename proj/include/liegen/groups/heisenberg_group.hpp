#pragma once

#include <stdexcept>
#include <string>

#include "liegen/groups/matrix3.hpp"

namespace liegen::groups {

/// Element of H3 with parameters (x1, x2, x3), realized as the
/// upper-unitriangular matrix [[1, x1, x2], [0, 1, x3], [0, 0, 1]].
struct H3Element {
  Rational x1 = 0, x2 = 0, x3 = 0;

  static H3Element identity() { return {}; }

  Matrix3<Rational> matrix() const {
    Matrix3<Rational> m = Matrix3<Rational>::identity();
    m(0, 1) = x1;
    m(0, 2) = x2;
    m(1, 2) = x3;
    return m;
  }

  static H3Element from_matrix(const Matrix3<Rational>& m) {
    const bool unitriangular = m(0, 0) == 1 && m(1, 1) == 1 && m(2, 2) == 1 && m(1, 0) == 0 &&
                               m(2, 0) == 0 && m(2, 1) == 0;
    if (!unitriangular) throw std::invalid_argument("matrix is not upper unitriangular: " + m.str());
    return {m(0, 1), m(0, 2), m(1, 2)};
  }

  friend bool operator==(const H3Element&, const H3Element&) = default;

  std::string str() const { return "(" + x1.str() + ", " + x2.str() + ", " + x3.str() + ")"; }
};

/// Element a*A + b*B + c*C of the Heisenberg algebra.
struct H3AlgebraElement {
  Rational a = 0, b = 0, c = 0;

  /// Strictly upper triangular [[0, a, b], [0, 0, c], [0, 0, 0]].
  Matrix3<Rational> matrix() const {
    Matrix3<Rational> m = Matrix3<Rational>::zero();
    m(0, 1) = a;
    m(0, 2) = b;
    m(1, 2) = c;
    return m;
  }

  static H3AlgebraElement from_matrix(const Matrix3<Rational>& m) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j <= i; ++j)
        if (m(i, j) != 0) throw std::invalid_argument("matrix is not strictly upper triangular: " + m.str());
    return {m(0, 1), m(0, 2), m(1, 2)};
  }

  friend bool operator==(const H3AlgebraElement&, const H3AlgebraElement&) = default;

  std::string str() const { return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")"; }
};

/// Composition in parameter space: (x1 + y1, y2 + x1 y3 + x2, x3 + y3).
inline H3Element h3_compose(const H3Element& g, const H3Element& h) {
  return {g.x1 + h.x1, h.x2 + g.x1 * h.x3 + g.x2, g.x3 + h.x3};
}

/// Inversion map (-x1, x1 x3 - x2, -x3).
inline H3Element h3_inverse(const H3Element& g) { return {-g.x1, g.x1 * g.x3 - g.x2, -g.x3}; }

/// The exponential series terminates after the square because M^3 = 0,
/// giving parameters (a, b + ac/2, c).
inline H3Element h3_exp(const H3AlgebraElement& m) { return {m.a, m.b + m.a * m.c / 2, m.c}; }

/// exp computed literally as I + M + M^2/2; the closed form above must agree.
inline Matrix3<Rational> h3_exp_series(const H3AlgebraElement& m) {
  const auto M = m.matrix();
  return Matrix3<Rational>::identity() + M + Rational(1, 2) * (M * M);
}

/// log(I + N) = N - N^2/2, exact since N^3 = 0 for N = g - I.
inline H3AlgebraElement h3_log(const H3Element& g) {
  const auto N = g.matrix() - Matrix3<Rational>::identity();
  return H3AlgebraElement::from_matrix(N - Rational(1, 2) * (N * N));
}

/// Basis of the 3x3 Heisenberg algebra; [A,B] = [B,C] = 0 and [A,C] = B.
inline Matrix3<Rational> h3_basis_A() { return Matrix3<Rational>::unit(0, 1); }
inline Matrix3<Rational> h3_basis_B() { return Matrix3<Rational>::unit(0, 2); }
inline Matrix3<Rational> h3_basis_C() { return Matrix3<Rational>::unit(1, 2); }

}  // namespace liegen::groups
