#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "liegen/numeric/rational.hpp"

namespace liegen::groups {

/// Dense 3x3 matrix over a homogeneous scalar type (Rational or Real).
/// Indices are 0-based (row, column).
template <typename T>
struct Matrix3 {
  std::array<T, 9> a{};

  static Matrix3 zero() {
    Matrix3 m;
    m.a.fill(T(0));
    return m;
  }

  static Matrix3 identity() {
    Matrix3 m = zero();
    m(0, 0) = m(1, 1) = m(2, 2) = T(1);
    return m;
  }

  /// Matrix with a single entry set.
  static Matrix3 unit(int r, int c, T value = T(1)) {
    Matrix3 m = zero();
    m(r, c) = value;
    return m;
  }

  T& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
  const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

  friend Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
    Matrix3 r = zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s(0);
        for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }

  friend Matrix3 operator+(Matrix3 x, const Matrix3& y) {
    for (std::size_t i = 0; i < 9; ++i) x.a[i] += y.a[i];
    return x;
  }
  friend Matrix3 operator-(Matrix3 x, const Matrix3& y) {
    for (std::size_t i = 0; i < 9; ++i) x.a[i] -= y.a[i];
    return x;
  }
  friend Matrix3 operator*(const T& s, Matrix3 x) {
    for (auto& v : x.a) v *= s;
    return x;
  }
  friend bool operator==(const Matrix3& x, const Matrix3& y) { return x.a == y.a; }

  std::array<T, 3> apply(const std::array<T, 3>& v) const {
    std::array<T, 3> r{};
    for (int i = 0; i < 3; ++i) {
      T s(0);
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * v[static_cast<std::size_t>(k)];
      r[static_cast<std::size_t>(i)] = s;
    }
    return r;
  }

  bool is_zero() const { return *this == zero(); }

  template <typename U>
  Matrix3<U> cast() const {
    Matrix3<U> m;
    for (std::size_t i = 0; i < 9; ++i) {
      if constexpr (std::is_same_v<T, Rational>)
        m.a[i] = a[i].template convert_to<U>();
      else
        m.a[i] = static_cast<U>(a[i]);
    }
    return m;
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
      os << (i ? "; " : "[");
      for (int j = 0; j < 3; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }
};

template <typename T>
Matrix3<T> commutator(const Matrix3<T>& x, const Matrix3<T>& y) {
  return x * y - y * x;
}

/// Largest absolute entry of x - y.
inline Real max_abs_diff(const Matrix3<Real>& x, const Matrix3<Real>& y) {
  Real m = 0;
  for (std::size_t i = 0; i < 9; ++i) m = std::max(m, std::fabs(x.a[i] - y.a[i]));
  return m;
}

}  // namespace liegen::groups
