#pragma once

#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "liegen/cli/config.hpp"
#include "liegen/contraction/legendre.hpp"
#include "liegen/contraction/limits.hpp"
#include "liegen/euclidean/bessel.hpp"
#include "liegen/groups/euclidean_group.hpp"
#include "liegen/groups/heisenberg_group.hpp"
#include "liegen/heisenberg/hermite.hpp"

namespace liegen::cli {

struct TableParams {
  unsigned max_n = 10;
  std::vector<int> orders{0, 1, 2, 3, 4, 5};
  std::vector<double> r_values{0, 0.5, 1, 2, 5, 10, 20};
};

inline const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds{"hermite_coeffs", "bessel_values", "contraction_convergence", "group_demo"};
  return kinds;
}

/// Fixed 15 significant digits, trailing zeros kept.
inline std::string fixed15(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.15Lg", v);
  return buf;
}

/// Row n holds the integer coefficients of H_n in descending powers of x.
inline std::string hermite_coeffs_table(const TableParams& p) {
  if (p.max_n > hermite::kDefaultMaxN) throw EnvelopeError("hermite_coeffs table limited to n <= 64");
  std::ostringstream os;
  os << "# hermite_coeffs: row n lists H_n coefficients, descending powers of x\n";
  for (unsigned n = 0; n <= p.max_n; ++n) {
    const Polynomial h = hermite::hermite_recurrence(n);
    for (int k = static_cast<int>(n); k >= 0; --k) {
      os << h.coefficient_x(static_cast<unsigned>(k)).str();
      if (k > 0) os << ", ";
    }
    os << '\n';
  }
  return os.str();
}

inline std::string bessel_values_table(const TableParams& p) {
  std::ostringstream os;
  os << "r";
  for (int n : p.orders) os << ", J_" << n;
  os << '\n';
  for (double r : p.r_values) {
    os << fixed15(r);
    for (int n : p.orders) os << ", " << fixed15(bessel::bessel_j(n, static_cast<Real>(r)));
    os << '\n';
  }
  return os.str();
}

inline std::string contraction_convergence_table(const SuiteConfig& cfg) {
  using namespace contraction;
  std::ostringstream os;
  const Polynomial f = poly_x * poly_x * poly_y + Rational(3) * poly_z * poly_y - poly_z * poly_z * poly_x + poly_z;
  std::vector<Rational> Rq;
  for (auto R : cfg.contraction.R_values) Rq.emplace_back(R);
  os << "# so(3) -> e2: max |L'x f + Py f|, |L'y f - Px f| at z = R, f = " << f.str() << " (zeta = z - R)\n";
  os << "R, lx_residual, ly_residual, ratio\n";
  const auto res = contraction_residual(f, Rq);
  for (std::size_t k = 0; k < res.size(); ++k) {
    os << res[k].R.str() << ", " << res[k].lx_residual.str() << ", " << res[k].ly_residual.str() << ", "
       << (k == 0 ? std::string("-") : Rational(res[k].max() / res[k - 1].max()).str()) << '\n';
  }

  os << "\n# polar ladder limit: L+ residual on J_1(r) e^{i phi}, r = 1, phi = 0.3\n";
  os << "R, residual\n";
  std::vector<Real> Rr;
  for (auto R : cfg.contraction.R_values) Rr.push_back(static_cast<Real>(R));
  for (const auto& pt : polar_ladder_limit(bessel_test_function(1), LadderSign::plus, 1, 0.3L, Rr))
    os << fixed15(pt.R) << ", " << fixed15(pt.residual) << '\n';

  os << "\n# Mehler-Heine: |l^{-m} P^m_l(cos(r/l)) - J_m(r)| at r = 2\n";
  os << "l";
  for (int m = 0; m <= cfg.contraction.legendre_max_m; ++m) os << ", m=" << m;
  os << '\n';
  std::vector<std::vector<MehlerHeinePoint>> cols;
  for (int m = 0; m <= cfg.contraction.legendre_max_m; ++m) cols.push_back(mehler_heine_check(m, 2, cfg.contraction.l_values));
  for (std::size_t k = 0; k < cfg.contraction.l_values.size(); ++k) {
    os << cfg.contraction.l_values[k];
    for (const auto& c : cols) os << ", " << fixed15(c[k].error);
    os << '\n';
  }
  return os.str();
}

inline std::string h3_demo() {
  using namespace groups;
  std::ostringstream os;
  const H3Element g{1, 2, 3}, h{Rational(1, 2), -1, 4};
  os << "# H3: (x1, x2, x3) <-> [[1, x1, x2], [0, 1, x3], [0, 0, 1]]\n";
  os << "g = " << g.str() << "\n";
  os << "h = " << h.str() << "\n";
  os << "g h = " << h3_compose(g, h).str() << "\n";
  os << "h g = " << h3_compose(h, g).str() << "\n";
  os << "g^-1 = " << h3_inverse(g).str() << "\n";
  os << "g g^-1 = " << h3_compose(g, h3_inverse(g)).str() << "\n";
  for (const H3AlgebraElement& m : {H3AlgebraElement{1, 0, 1}, H3AlgebraElement{2, 1, 3}, H3AlgebraElement{Rational(1, 2), 0, -1}})
    os << "exp(" << m.a.str() << "," << m.b.str() << "," << m.c.str() << ") = " << h3_exp(m).str() << "\n";
  os << "log" << g.str() << " = " << h3_log(g).str() << "\n";
  return os.str();
}

inline std::string e2_demo() {
  using namespace groups;
  std::ostringstream os;
  auto show = [](const E2Element& e) {
    return "(" + fixed15(e.x()) + ", " + fixed15(e.y()) + ", " + fixed15(e.theta()) + ")";
  };
  constexpr Real pi = std::numbers::pi_v<Real>;
  const E2Element g(1, 0, pi / 2), h(0, 2, pi / 4);
  os << "# E2: (x, y, theta) <-> [[cos, -sin, x], [sin, cos, y], [0, 0, 1]]\n";
  os << "g = " << show(g) << "\n";
  os << "h = " << show(h) << "\n";
  os << "g h = " << show(e2_compose(g, h)) << "\n";
  os << "h g = " << show(e2_compose(h, g)) << "\n";
  os << "g^-1 = " << show(e2_inverse(g)) << "\n";
  const auto p = e2_apply(g, {1, 1});
  os << "g (1, 1) = (" << fixed15(p[0]) << ", " << fixed15(p[1]) << ")\n";
  os << "exp(3 Px) = " << e2_exp_translation<Rational>(3, Axis::x).str() << "\n";
  os << "exp(pi/2 J) = " << show(E2Element(0, 0, pi / 2)) << "\n";
  return os.str();
}

inline std::string group_demo(const std::string& group) {
  if (group == "h3") return h3_demo();
  if (group == "e2") return e2_demo();
  throw ConfigError("unknown group '" + group + "' (expected h3 or e2)");
}

inline std::string emit_table(const std::string& kind, const TableParams& p, const SuiteConfig& cfg,
                              const std::string& group = "h3") {
  if (kind == "hermite_coeffs") return hermite_coeffs_table(p);
  if (kind == "bessel_values") return bessel_values_table(p);
  if (kind == "contraction_convergence") return contraction_convergence_table(cfg);
  if (kind == "group_demo") return group_demo(group);
  throw ConfigError("unknown table kind '" + kind + "'");
}

}  // namespace liegen::cli
