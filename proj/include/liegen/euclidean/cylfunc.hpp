#pragma once

#include <map>
#include <sstream>
#include <string>

#include "liegen/euclidean/bessel.hpp"

namespace liegen::bessel {

/// coeff * e^{i n phi} * J_n(r)
struct CylTerm {
  int order = 0;
  Complex coeff = 1;
};

/// Finite span of mixed-basis functions, one coefficient per order.
class CylFunc {
 public:
  CylFunc() = default;
  CylFunc(std::initializer_list<CylTerm> terms) {
    for (const auto& t : terms) add(t);
  }

  void add(const CylTerm& t) {
    if (t.coeff == Complex(0)) return;
    auto [it, inserted] = terms_.try_emplace(t.order, t.coeff);
    if (!inserted) {
      it->second += t.coeff;
      if (it->second == Complex(0)) terms_.erase(it);
    }
  }

  const std::map<int, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(int order) const {
    auto it = terms_.find(order);
    return it == terms_.end() ? Complex(0) : it->second;
  }

  friend bool operator==(const CylFunc&, const CylFunc&) = default;

  Complex evaluate(Real r, Real phi, const BesselEval& cfg = {}) const {
    Complex sum = 0;
    for (const auto& [n, c] : terms_) sum += c * std::polar(Real(1), n * phi) * bessel_j(n, Complex(r), cfg);
    return sum;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << static_cast<double>(c.real()) << "," << static_cast<double>(c.imag()) << ")|" << n << ">";
    }
    return os.str();
  }

 private:
  std::map<int, Complex> terms_;
};

enum class PolarOp { Lz, Pplus, Pminus };

/// Lz |n> = n |n>, P+ |n> = -|n+1>, P- |n> = -|n-1>.
inline CylFunc apply_polar_op(PolarOp op, const CylFunc& f) {
  CylFunc out;
  for (const auto& [n, c] : f.terms()) {
    switch (op) {
      case PolarOp::Lz: out.add({n, c * Real(n)}); break;
      case PolarOp::Pplus: out.add({n + 1, -c}); break;
      case PolarOp::Pminus: out.add({n - 1, -c}); break;
    }
  }
  return out;
}

inline constexpr Real kCrosscheckMinRadius = 0.2L;
inline constexpr Real kCrosscheckStep = 1e-5L;

/// e^{+-i phi}(+-d/dr + (i/r) d/dphi) applied to J_n(r) e^{i n phi} by central
/// differences with step h, minus the ladder action -J_{n+-1} e^{i(n+-1)phi}.
inline Real polar_numeric_crosscheck(PolarOp op, int n, Real r, Real phi, Real h = kCrosscheckStep,
                                     const BesselEval& cfg = {}) {
  if (op == PolarOp::Lz) throw std::invalid_argument("crosscheck is defined for P+ and P- only");
  if (r < kCrosscheckMinRadius) throw std::invalid_argument("crosscheck radius below coordinate-singularity cutoff");
  const CylFunc f{{n, 1}};
  auto value = [&](Real rr, Real pp) { return f.evaluate(rr, pp, cfg); };
  const Complex d_r = (value(r + h, phi) - value(r - h, phi)) / (2 * h);
  const Complex d_phi = (value(r, phi + h) - value(r, phi - h)) / (2 * h);
  const Complex i(0, 1);
  const Real sign = op == PolarOp::Pplus ? 1 : -1;
  const Complex numeric = std::polar(Real(1), sign * phi) * (sign * d_r + i / r * d_phi);
  return std::abs(numeric - apply_polar_op(op, f).evaluate(r, phi, cfg));
}

}  // namespace liegen::bessel
