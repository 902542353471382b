#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liegen/numeric/polynomial.hpp"

namespace liegen {

/// Linear differential operator with polynomial coefficients, kept in normal
/// order: a sum of c * x^a y^b z^c * d^alpha, multiplications to the left of
/// all derivatives. The normal form is unique, so two operators are equal
/// exactly when their term maps are.
class OperatorExpr {
 public:
  using Key = std::pair<Exponents, Exponents>;  // (multiplier powers, derivative orders)
  using Terms = std::map<Key, Rational>;

  OperatorExpr() = default;

  static OperatorExpr scalar(const Rational& c) {
    OperatorExpr o;
    o.add_term({{0, 0, 0}, {0, 0, 0}}, c);
    return o;
  }
  static OperatorExpr identity() { return scalar(1); }

  static OperatorExpr multiply_by(Var v) {
    Exponents e{0, 0, 0};
    e[index(v)] = 1;
    OperatorExpr o;
    o.add_term({e, {0, 0, 0}}, 1);
    return o;
  }

  static OperatorExpr multiply_by(const Polynomial& p) {
    OperatorExpr o;
    for (const auto& [e, c] : p.terms()) o.add_term({e, {0, 0, 0}}, c);
    return o;
  }

  static OperatorExpr partial(Var v) {
    Exponents e{0, 0, 0};
    e[index(v)] = 1;
    OperatorExpr o;
    o.add_term({{0, 0, 0}, e}, 1);
    return o;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  OperatorExpr& operator+=(const OperatorExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  OperatorExpr& operator-=(const OperatorExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  OperatorExpr& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator-(OperatorExpr a) { return a *= Rational(-1); }
  friend OperatorExpr operator*(OperatorExpr a, const Rational& s) { return a *= s; }
  friend OperatorExpr operator*(const Rational& s, OperatorExpr a) { return a *= s; }

  /// Composition (a * b)(f) = a(b(f)), reduced to normal order with
  /// d^beta x^gamma = sum_k C(beta,k) gamma!/(gamma-k)! x^(gamma-k) d^(beta-k).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) reorder_into(r, ka, kb, ca * cb);
    return r;
  }

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return a.terms_ == b.terms_; }

  Polynomial apply(const Polynomial& p) const {
    Polynomial r;
    for (const auto& [k, c] : terms_) {
      Polynomial d = p;
      for (std::size_t i = 0; i < kVarCount && !d.is_zero(); ++i)
        d = d.derivative(static_cast<Var>(i), k.second[i]);
      if (d.is_zero()) continue;
      r += Polynomial::monomial(c, k.first) * d;
    }
    return r;
  }

  /// Action on p * exp(-v^2/2): returns q with O(p w) = q w. Conjugation by the
  /// weight turns d/dv into d/dv - v.
  Polynomial apply_weighted(const Polynomial& p, Var weighted = Var::x) const {
    const auto wi = index(weighted);
    Polynomial r;
    for (const auto& [k, c] : terms_) {
      Polynomial d = p;
      for (std::size_t i = 0; i < kVarCount && !d.is_zero(); ++i) {
        for (unsigned n = 0; n < k.second[i]; ++n) {
          Polynomial next = d.derivative(static_cast<Var>(i));
          if (i == wi) next -= d.times(weighted);
          d = std::move(next);
        }
      }
      if (d.is_zero()) continue;
      r += Polynomial::monomial(c, k.first) * d;
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const Rational mag = abs(c);
      bool bare = true;
      for (std::size_t i = 0; i < kVarCount; ++i)
        if (k.first[i] || k.second[i]) bare = false;
      if (mag != 1 || bare) os << mag.str();
      for (std::size_t i = 0; i < kVarCount; ++i)
        if (k.first[i]) os << var_name(static_cast<Var>(i)) << (k.first[i] > 1 ? "^" + std::to_string(k.first[i]) : "");
      for (std::size_t i = 0; i < kVarCount; ++i)
        if (k.second[i])
          os << "d" << var_name(static_cast<Var>(i)) << (k.second[i] > 1 ? "^" + std::to_string(k.second[i]) : "");
    }
    return os.str();
  }

 private:
  static Rational binomial(unsigned n, unsigned k) {
    Rational r = 1;
    for (unsigned j = 1; j <= k; ++j) r = r * Rational(n - k + j) / Rational(j);
    return r;
  }

  static Rational falling(unsigned n, unsigned k) {
    Rational r = 1;
    for (unsigned j = 0; j < k; ++j) r *= Rational(n - j);
    return r;
  }

  static void reorder_into(OperatorExpr& out, const Key& ka, const Key& kb, const Rational& c) {
    // Variables commute with each other, so the reordering factorizes per variable.
    std::vector<std::pair<Key, Rational>> partial{{{ka.first, kb.second}, c}};
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const unsigned beta = ka.second[i];
      const unsigned gamma = kb.first[i];
      std::vector<std::pair<Key, Rational>> next;
      for (const auto& [key, coeff] : partial) {
        for (unsigned k = 0; k <= std::min(beta, gamma); ++k) {
          Key nk = key;
          nk.first[i] = static_cast<std::uint16_t>(nk.first[i] + gamma - k);
          nk.second[i] = static_cast<std::uint16_t>(nk.second[i] + beta - k);
          next.emplace_back(nk, coeff * binomial(beta, k) * falling(gamma, k));
        }
      }
      partial = std::move(next);
    }
    for (const auto& [key, coeff] : partial) out.add_term(key, coeff);
  }

  Terms terms_;
};

inline OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }
inline OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b + b * a; }

}  // namespace liegen
