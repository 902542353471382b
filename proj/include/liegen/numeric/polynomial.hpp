#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liegen/numeric/rational.hpp"

namespace liegen {

/// Coordinates of the polynomial universe. Every Polynomial lives in the
/// same three-variable ring; univariate polynomials simply never use y, z.
enum class Var : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::size_t kVarCount = 3;

using Exponents = std::array<std::uint16_t, kVarCount>;

inline constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

inline const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
  }
  return "?";
}

/// Evaluation point; unset coordinates are only legal for variables the
/// polynomial does not depend on.
using Point = std::array<std::optional<Rational>, kVarCount>;

inline Point point_x(Rational x) { return {std::move(x), std::nullopt, std::nullopt}; }

inline Point point_xyz(Rational x, Rational y, Rational z) {
  return {std::move(x), std::move(y), std::move(z)};
}

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored, so structural equality is value equality.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(Rational c) { add_term({0, 0, 0}, std::move(c)); }  // NOLINT: implicit constant
  Polynomial(int c) : Polynomial(Rational(c)) {}                   // NOLINT

  static Polynomial variable(Var v) {
    Exponents e{0, 0, 0};
    e[index(v)] = 1;
    return monomial(1, e);
  }

  static Polynomial monomial(Rational c, Exponents e) {
    Polynomial p;
    p.add_term(e, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[0]) + int(e[1]) + int(e[2]));
    return d;
  }

  int degree_in(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[index(v)]));
    return d;
  }

  bool depends_on(Var v) const {
    for (const auto& [e, c] : terms_)
      if (e[index(v)] > 0) return true;
    return false;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of x^k for a polynomial in x alone.
  Rational coefficient_x(unsigned k) const {
    return coefficient({static_cast<std::uint16_t>(k), 0, 0});
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(int s, Polynomial a) { return a *= Rational(s); }
  friend Polynomial operator*(Polynomial a, int s) { return a *= Rational(s); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kVarCount; ++i)
          e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Multiplication by a single coordinate, cheaper than a general product.
  Polynomial times(Var v) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      Exponents s = e;
      ++s[index(v)];
      r.terms_.emplace(s, c);
    }
    return r;
  }

  Polynomial derivative(Var v) const {
    Polynomial r;
    const auto i = index(v);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      --d[i];
      r.terms_.emplace(d, c * e[i]);
    }
    return r;
  }

  Polynomial derivative(Var v, unsigned order) const {
    Polynomial r = *this;
    for (unsigned k = 0; k < order && !r.is_zero(); ++k) r = r.derivative(v);
    return r;
  }

  /// Exact evaluation. Throws if a coordinate the polynomial needs is unset.
  Rational eval(const Point& p) const {
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (!p[i] && depends_on(static_cast<Var>(i)))
        throw std::invalid_argument(std::string("evaluation point is missing coordinate ") +
                                    var_name(static_cast<Var>(i)));
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < kVarCount; ++i)
        if (e[i] > 0) t *= rational_pow(*p[i], e[i]);
      sum += t;
    }
    return sum;
  }

  Real eval_real(Real x, Real y = 0, Real z = 0) const {
    Real sum = 0;
    for (const auto& [e, c] : terms_) {
      Real t = to_real(c);
      for (unsigned k = 0; k < e[0]; ++k) t *= x;
      for (unsigned k = 0; k < e[1]; ++k) t *= y;
      for (unsigned k = 0; k < e[2]; ++k) t *= z;
      sum += t;
    }
    return sum;
  }

  /// Replaces variable v by the polynomial q (composition).
  Polynomial substitute(Var v, const Polynomial& q) const {
    const auto i = index(v);
    const int dmax = degree_in(v);
    std::vector<Polynomial> powers;
    powers.reserve(std::max(dmax + 1, 1));
    powers.emplace_back(1);
    for (int k = 1; k <= dmax; ++k) powers.push_back(powers.back() * q);
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[i] = 0;
      r += monomial(c, rest) * powers[e[i]];
    }
    return r;
  }

  /// p(-x) etc.; reflection of a single coordinate.
  Polynomial reflect(Var v) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, e[index(v)] % 2 ? Rational(-c) : c);
    return r;
  }

  /// Coefficients of a polynomial in x alone, highest power first.
  std::vector<Rational> coefficients_descending() const {
    for (const auto& [e, c] : terms_)
      if (e[1] != 0 || e[2] != 0)
        throw std::invalid_argument("coefficients_descending needs a polynomial in x alone");
    const int d = degree();
    std::vector<Rational> out;
    for (int k = d; k >= 0; --k) out.push_back(coefficient_x(static_cast<unsigned>(k)));
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
      if (mag != 1 || constant) os << mag.str();
      for (std::size_t i = 0; i < kVarCount; ++i) {
        if (e[i] == 0) continue;
        os << var_name(static_cast<Var>(i));
        if (e[i] > 1) os << '^' << e[i];
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline const Polynomial poly_x = Polynomial::variable(Var::x);
inline const Polynomial poly_y = Polynomial::variable(Var::y);
inline const Polynomial poly_z = Polynomial::variable(Var::z);

/// All monomials of total degree <= d in the given variables, coefficient 1.
inline std::vector<Polynomial> monomial_basis(unsigned d, std::initializer_list<Var> vars) {
  std::vector<Polynomial> out;
  std::vector<Var> vs(vars);
  Exponents e{0, 0, 0};
  auto rec = [&](auto&& self, std::size_t k, unsigned remaining) -> void {
    if (k == vs.size()) {
      out.push_back(Polynomial::monomial(1, e));
      return;
    }
    for (unsigned p = 0; p <= remaining; ++p) {
      e[index(vs[k])] = static_cast<std::uint16_t>(p);
      self(self, k + 1, remaining - p);
    }
    e[index(vs[k])] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace liegen
