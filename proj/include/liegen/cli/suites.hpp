#pragma once

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "liegen/cli/config.hpp"
#include "liegen/cli/report.hpp"
#include "liegen/contraction/legendre.hpp"
#include "liegen/contraction/limits.hpp"
#include "liegen/contraction/vector_field.hpp"
#include "liegen/euclidean/cylfunc.hpp"
#include "liegen/euclidean/flow.hpp"
#include "liegen/euclidean/identities.hpp"
#include "liegen/euclidean/plane_ops.hpp"
#include "liegen/groups/axioms.hpp"
#include "liegen/groups/euclidean_group.hpp"
#include "liegen/groups/heisenberg_group.hpp"
#include "liegen/heisenberg/discrete_matrix.hpp"
#include "liegen/heisenberg/identities.hpp"
#include "liegen/heisenberg/series_checks.hpp"

namespace liegen::cli {

using nlohmann::json;

namespace detail {

inline std::string padded(long long n, int width = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*lld", width, n);
  return buf;
}

/// Compact form for check ids; -0 prints as 0.
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);
  return buf;
}

inline double magnitude(const Polynomial& p) {
  double m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, static_cast<double>(to_real(abs(c))));
  return m;
}

inline double magnitude(const hermite::SeriesT& s) {
  double m = 0;
  for (std::size_t k = 0; k <= s.order(); ++k) m = std::max(m, magnitude(s[k]));
  return m;
}

inline double magnitude(const contraction::VectorFieldOp& v) {
  return std::max({magnitude(v.coefficient(Var::x)), magnitude(v.coefficient(Var::y)), magnitude(v.coefficient(Var::z))});
}

inline double magnitude(const groups::Matrix3<Rational>& m) {
  double out = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out = std::max(out, static_cast<double>(to_real(abs(m(i, j)))));
  return out;
}

inline bool series_zero(const hermite::SeriesT& s) { return s.is_zero(); }

}  // namespace detail

// ---------------------------------------------------------------- groups

inline SuiteReport run_groups(const SuiteConfig& cfg) {
  using namespace groups;
  using contraction::vf_commutator;
  SuiteBuilder b("groups");
  const auto seed = cfg.general.seed;

  const auto h3 = axiom_suite(GroupKind::H3, cfg.groups.samples, seed);
  b.exact("axioms/H3", {{"samples", cfg.groups.samples}, {"seed", seed}}, h3.max_residual() == 0,
          static_cast<double>(h3.max_residual()));
  const auto e2 = axiom_suite(GroupKind::E2, cfg.groups.samples, seed);
  b.numeric("axioms/E2", {{"samples", cfg.groups.samples}, {"seed", seed}}, static_cast<double>(e2.max_residual()),
            cfg.groups.e2_tol);

  // exponential map: closed form against the terminating series
  {
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (std::size_t k = 0; k < cfg.groups.samples; ++k) {
      const H3AlgebraElement m{groups::detail::random_rational(rng), groups::detail::random_rational(rng),
                               groups::detail::random_rational(rng)};
      ok = ok && h3_exp(m).matrix() == h3_exp_series(m) && h3_log(h3_exp(m)) == m;
    }
    b.exact("h3_exp/closed_form", {{"samples", cfg.groups.samples}, {"seed", seed}}, ok);
    b.exact("h3_exp/worked_example", {{"a", 1}, {"b", 0}, {"c", 1}},
            h3_exp({1, 0, 1}) == H3Element{1, Rational(1, 2), 1});
  }

  const auto A = h3_basis_A(), B = h3_basis_B(), C = h3_basis_C();
  b.exact("h3/matrix/[A,B]", json::object(), commutator(A, B).is_zero(), detail::magnitude(commutator(A, B)));
  b.exact("h3/matrix/[B,C]", json::object(), commutator(B, C).is_zero(), detail::magnitude(commutator(B, C)));
  b.exact("h3/matrix/[A,C]-B", json::object(), commutator(A, C) == B, detail::magnitude(commutator(A, C) - B));

  const auto ladder = hermite::ladder_representation_check(cfg.groups.max_degree);
  b.exact("h3/ladder/[a-,a+]-I", {{"max_degree", cfg.groups.max_degree}},
          ladder.xz_minus_y.is_zero() && ladder.action_consistent);
  b.exact("h3/ladder/[a-,I]", json::object(), ladder.xy.is_zero());
  b.exact("h3/ladder/[I,a+]", json::object(), ladder.yz.is_zero());

  const auto X = e2_generator_Px(), Y = e2_generator_Py(), Z = e2_generator_rotation();
  b.exact("e2/matrix/[X,Y]", json::object(), commutator(X, Y).is_zero());
  b.exact("e2/matrix/[Z,X]-Y", json::object(), commutator(Z, X) == Y);
  b.exact("e2/matrix/[Y,Z]-X", json::object(), commutator(Y, Z) == X);

  const auto plane = bessel::plane_relation_check(cfg.groups.max_degree);
  b.exact("e2/plane/[Px,-Py]", {{"max_degree", cfg.groups.max_degree}}, plane.px_py.is_zero() && plane.monomial_failures == 0);
  b.exact("e2/plane/[Lz,Px]+Py", {{"max_degree", cfg.groups.max_degree}}, plane.lz_px.is_zero() && plane.monomial_failures == 0);
  b.exact("e2/plane/[-Py,Lz]-Px", {{"max_degree", cfg.groups.max_degree}}, plane.py_lz.is_zero() && plane.monomial_failures == 0);
  {
    bool commute = true;
    for (int a = -3; a <= 3; ++a)
      for (int c = -3; c <= 3; ++c) {
        const auto tx = e2_exp_translation<Rational>(Rational(a, 2), Axis::x);
        const auto ty = e2_exp_translation<Rational>(Rational(c, 3), Axis::y);
        commute = commute && tx * ty == ty * tx;
      }
    b.exact("e2/translations_commute", json::object(), commute);
  }

  {
    using namespace contraction;
    const unsigned d = cfg.groups.max_degree;
    const auto xy = vf_commutator(vf_lx(), vf_ly()) + vf_lz();
    const auto yz = vf_commutator(vf_ly(), vf_lz()) + vf_lx();
    const auto zx = vf_commutator(vf_lz(), vf_lx()) + vf_ly();
    const bool action = commutator_matches_action(vf_lx(), vf_ly(), d) && commutator_matches_action(vf_ly(), vf_lz(), d) &&
                        commutator_matches_action(vf_lz(), vf_lx(), d);
    b.exact("so3/[Lx,Ly]+Lz", {{"max_degree", d}}, xy.is_zero() && action, detail::magnitude(xy));
    b.exact("so3/[Ly,Lz]+Lx", {{"max_degree", d}}, yz.is_zero() && action, detail::magnitude(yz));
    b.exact("so3/[Lz,Lx]+Ly", {{"max_degree", d}}, zx.is_zero() && action, detail::magnitude(zx));
    b.exact("so3/jacobi", json::object(), jacobi_sum(vf_lx(), vf_ly(), vf_lz()).is_zero());
    for (auto R : cfg.groups.scaled_R) {
      const auto rep = scaled_commutator_check(Rational(R), d);
      const json p{{"R", R}, {"max_degree", d}};
      b.exact("so3_scaled/R=" + detail::padded(R, 6) + "/[Lx',Ly']+Lz'/R^2", p, rep.xy.is_zero() && rep.action_consistent,
              detail::magnitude(rep.xy));
      b.exact("so3_scaled/R=" + detail::padded(R, 6) + "/[Ly',Lz']+Lx'", p, rep.yz.is_zero() && rep.action_consistent,
              detail::magnitude(rep.yz));
      b.exact("so3_scaled/R=" + detail::padded(R, 6) + "/[Lz',Lx']+Ly'", p, rep.zx.is_zero() && rep.action_consistent,
              detail::magnitude(rep.zx));
    }
    b.exact("so3_contracted/e2_relations", json::object(), contracted_relations().is_zero());
  }
  return b.finish();
}

// ---------------------------------------------------------------- hermite

inline SuiteReport run_hermite(const SuiteConfig& cfg) {
  using namespace hermite;
  SuiteBuilder b("hermite");
  const unsigned max_n = cfg.hermite.max_n;
  const unsigned envelope = std::max({max_n, cfg.hermite.genfunc_order, cfg.hermite.anticommutator_max_n,
                                      cfg.hermite.orthonormality_max_n}) + 1;

  for (unsigned n = 0; n <= max_n; ++n) {
    const json p{{"n", n}};
    const std::string tag = "/n=" + detail::padded(n);
    const Polynomial rod = hermite_rodrigues(n, envelope);
    const Polynomial diff = rod - hermite_recurrence(n);
    b.exact("rodrigues_A1" + tag, p, diff.is_zero(), detail::magnitude(diff));
    for (auto which : {HermiteIdentity::ode_A2, HermiteIdentity::recursion_A3, HermiteIdentity::diffrel_A4}) {
      const auto r = verify_hermite_identity(which, n, envelope);
      b.exact(std::string(identity_name(which)) + tag, p, r.is_zero(), detail::magnitude(r.polynomial));
    }
  }

  for (unsigned n = 0; n <= cfg.hermite.anticommutator_max_n; ++n) {
    const auto r = verify_hermite_identity(HermiteIdentity::anticommutator, n, envelope);
    b.exact("anticommutator/n=" + detail::padded(n), {{"n", n}, {"eigenvalue", 2 * n + 1}}, r.is_zero(),
            detail::magnitude(r.polynomial));
  }

  for (unsigned n = 0; n <= cfg.hermite.orthonormality_max_n; ++n) {
    const auto r = verify_hermite_identity(HermiteIdentity::orthonormality, n, envelope);
    b.exact("orthonormality/n=" + detail::padded(n), {{"n", n}, {"m_range", "0.." + std::to_string(n)}}, r.is_zero(),
            static_cast<double>(to_real(r.scalar)), "sum over m <= n of (<n|m> - delta)^2");
  }

  {
    const auto s = hermite_genfunc_check(cfg.hermite.genfunc_order, envelope);
    b.exact("genfunc_A5", {{"order", cfg.hermite.genfunc_order}}, s.is_zero(), detail::magnitude(s));
    const auto d = disentangle_check(cfg.hermite.disentangle_order);
    b.exact("disentangling", {{"order", cfg.hermite.disentangle_order}}, d.is_zero(), detail::magnitude(d));
  }

  {
    const std::size_t N = cfg.hermite.discrete_dimension;
    const auto am = discrete_matrix(DiscreteOp::a_minus, N), ap = discrete_matrix(DiscreteOp::a_plus, N);
    const auto anti = am * ap + ap * am;
    bool ok = anti.is_diagonal();
    for (std::size_t n = 0; n + 2 <= N; ++n) ok = ok && anti(n, n) == SqrtRational(static_cast<int>(2 * n + 1));
    b.exact("discrete/anticommutator_diagonal", {{"N", N}, {"checked_up_to", N - 2}}, ok);
    const auto comm = am * ap - ap * am;
    bool comm_ok = comm.is_diagonal();
    for (std::size_t n = 0; n + 2 <= N; ++n) comm_ok = comm_ok && comm(n, n) == SqrtRational(1);
    b.exact("discrete/commutator_identity", {{"N", N}, {"checked_up_to", N - 2}}, comm_ok,
            0, "last diagonal entry is the truncation artifact -(N-1)");
  }

  for (unsigned n = 0; n <= cfg.hermite.orthonormality_max_n; ++n) {
    const auto gap = raising_consistency_residual(n, envelope);
    b.exact("raising_consistency/n=" + detail::padded(n), {{"n", n}}, gap.is_zero(),
            gap.is_zero() ? 0 : static_cast<double>(gap.to_real()));
  }
  return b.finish();
}

// ---------------------------------------------------------------- bessel

inline SuiteReport run_bessel(const SuiteConfig& cfg) {
  using namespace bessel;
  SuiteBuilder b("bessel");
  const auto& bc = cfg.bessel;

  for (auto which : {BesselIdentity::ode_A6, BesselIdentity::recursion_A7, BesselIdentity::diffrel_A8,
                     BesselIdentity::diffrel_A9, BesselIdentity::diffrel_A10})
    for (int n : bc.orders)
      for (double r : bc.r_values) {
        const double res = static_cast<double>(verify_bessel_identity(which, n, r));
        const bool relaxed = which == BesselIdentity::ode_A6 && r <= bc.ode_small_r;
        b.numeric(std::string(identity_name(which)) + "/n=" + detail::padded(n, 2) + "/r=" + detail::num(r),
                  {{"n", n}, {"r", r}}, res, relaxed ? bc.ode_small_r_tol : bc.identity_tol,
                  relaxed ? "1/r amplification near the origin" : "");
      }

  for (auto op : {PolarOp::Pplus, PolarOp::Pminus})
    for (int n : bc.orders)
      for (double r : bc.crosscheck_r)
        for (double phi : bc.crosscheck_phi) {
          const double res = static_cast<double>(polar_numeric_crosscheck(op, n, r, phi));
          b.numeric(std::string("ladder_crosscheck/") + (op == PolarOp::Pplus ? "P+" : "P-") + "/n=" +
                        detail::padded(n, 2) + "/r=" + detail::num(r) + "/phi=" + detail::num(phi),
                    {{"n", n}, {"r", r}, {"phi", phi}, {"h", static_cast<double>(kCrosscheckStep)}}, res,
                    bc.crosscheck_tol);
        }

  {
    const CylFunc f{{-3, Complex(1, 2)}, {0, 1}, {4, Complex(0, -1)}};
    const auto pm = apply_polar_op(PolarOp::Pplus, apply_polar_op(PolarOp::Pminus, f));
    const auto mp = apply_polar_op(PolarOp::Pminus, apply_polar_op(PolarOp::Pplus, f));
    b.exact("ladder_algebra/P+P-=P-P+=I", json::object(), pm == f && mp == f);
  }

  {
    Real lo = 2, hi = 3;
    for (int it = 0; it < 80; ++it) {
      const Real mid = (lo + hi) / 2;
      (bessel_j(0, lo) * bessel_j(0, mid) <= 0 ? hi : lo) = mid;
    }
    const Real root = (lo + hi) / 2;
    b.numeric("J0_first_zero", {{"root", static_cast<double>(root)}}, static_cast<double>(std::abs(bessel_j(0, root))),
              1e-10, "root located by bisection on [2, 3]");
  }

  {
    BesselEval doubled;
    doubled.max_terms *= 2;
    doubled.epsilon = 1e-19L;
    Real worst = 0;
    for (int n = -20; n <= 20; n += 2)
      for (Real x = 0; x <= 30; x += 1.5L) {
        const Complex a = bessel_j(n, Complex(x)), c = bessel_j(n, Complex(x), doubled);
        worst = std::max(worst, std::abs(a - c) / std::max(Real(1e-3), std::abs(c)));
      }
    b.numeric("series_term_budget_stability", {{"grid", "|n|<=20, 0<=x<=30"}}, static_cast<double>(worst), 1e-13);
  }

  // translation generating function: printed closed side gated, the
  // corrected closed side recorded next to it
  const Complex i(0, 1);
  for (int n : bc.genfunc_orders)
    for (double r : bc.genfunc_r)
      for (double phi : bc.genfunc_phi)
        for (double ta : bc.genfunc_t_abs)
          for (int dir = 0; dir < 4; ++dir) {
            static const Complex dirs[4] = {Complex(1), i, Complex(-1), -i};
            const Complex t = static_cast<Real>(ta) * dirs[dir];
            const std::string id = "/n=" + detail::padded(n, 2) + "/r=" + detail::num(r) + "/phi=" + detail::num(phi) +
                                   "/t=" + detail::num(static_cast<double>(t.real())) + (t.imag() >= 0 ? "+" : "") +
                                   detail::num(static_cast<double>(t.imag())) + "i";
            const json p{{"n", n}, {"r", r}, {"phi", phi}, {"t_re", static_cast<double>(t.real())},
                         {"t_im", static_cast<double>(t.imag())}, {"M", bc.genfunc_terms}};
            try {
              b.numeric("genfunc_A11" + id, p,
                        static_cast<double>(genfunc_a11_check(n, r, phi, t, bc.genfunc_terms)), bc.genfunc_tol);
            } catch (const BranchError& e) {
              b.skipped("genfunc_A11" + id, p, std::string("branch guard: ") + e.what());
            }
            b.diagnostic("genfunc_A11_corrected" + id, p,
                         static_cast<double>(genfunc_a11_check(n, r, phi, t, bc.genfunc_terms, GenfuncForm::corrected)),
                         "J_n(u) ((x+iy)/u)^n, u^2 = r^2 + 2t(x+iy)");
          }
  return b.finish();
}

// ---------------------------------------------------------------- contraction

/// Degree <= 6 test polynomials in tangent-plane coordinates (x, y, zeta).
inline std::vector<std::pair<std::string, Polynomial>> contraction_test_polynomials() {
  const Polynomial x = poly_x, y = poly_y, z = poly_z;
  return {
      {"x^2y+3zy-z^2x+z", x * x * y + 3 * z * y - z * z * x + z},
      {"z^3+xyz^2", z * z * z + x * y * z * z},
      {"x^4z^2-y^3z+5z", x * x * x * x * z * z - y * y * y * z + 5 * z},
      {"(x+y+z)^6", [&] {
         Polynomial s = x + y + z, p(1);
         for (int k = 0; k < 6; ++k) p = p * s;
         return p;
       }()},
  };
}

inline SuiteReport run_contraction(const SuiteConfig& cfg) {
  using namespace contraction;
  SuiteBuilder b("contraction");
  const auto& cc = cfg.contraction;
  std::vector<Rational> Rq;
  for (auto R : cc.R_values) Rq.emplace_back(R);

  for (const auto& [name, f] : contraction_test_polynomials()) {
    const auto res = contraction_residual(f, Rq);
    for (std::size_t k = 1; k < res.size(); ++k) {
      for (int comp = 0; comp < 2; ++comp) {
        const Rational& prev = comp == 0 ? res[k - 1].lx_residual : res[k - 1].ly_residual;
        const Rational& cur = comp == 0 ? res[k].lx_residual : res[k].ly_residual;
        const std::string which = comp == 0 ? "L'x+Py" : "L'y-Px";
        const json p{{"f", name}, {"R_from", cc.R_values[k - 1]}, {"R_to", cc.R_values[k]},
                     {"residual_from", static_cast<double>(to_real(prev))}, {"residual_to", static_cast<double>(to_real(cur))}};
        if (prev == 0 && cur == 0) {
          b.exact("rate/" + which + "/" + name + "/R=" + detail::padded(cc.R_values[k], 5), p, true, 0,
                  "residual identically zero");
          continue;
        }
        const double ratio = prev == 0 ? INFINITY : static_cast<double>(to_real(cur / prev));
        b.property("rate/" + which + "/" + name + "/R=" + detail::padded(cc.R_values[k], 5), p, ratio,
                   std::abs(ratio - cc.rate_target) <= cc.rate_tol);
      }
    }
  }
  for (const auto& [name, f] : {std::pair<std::string, Polynomial>{"y", poly_y}, {"x^2y", poly_x * poly_x * poly_y}, {"7", Polynomial(7)}}) {
    bool zero = true;
    for (const auto& r : contraction_residual(f, Rq)) zero = zero && r.max() == 0;
    b.exact("z_independent/" + name, {{"f", name}}, zero);
  }

  std::vector<Real> Rr;
  for (auto R : cc.R_values) Rr.push_back(static_cast<Real>(R));
  for (int n : cc.ladder_orders)
    for (double r : cc.ladder_r)
      for (auto sign : {LadderSign::plus, LadderSign::minus}) {
        const auto res = polar_ladder_limit(bessel_test_function(n), sign, r, 0.3L, Rr);
        bool monotone = true;
        double worst_ratio = 0;
        for (std::size_t k = 1; k < res.size(); ++k) {
          monotone = monotone && res[k].residual < res[k - 1].residual;
          worst_ratio = std::max(worst_ratio, static_cast<double>(res[k].residual / res[k - 1].residual));
        }
        json p{{"n", n}, {"r", r}, {"phi", 0.3}, {"sign", sign == LadderSign::plus ? "+" : "-"},
               {"residual_at_R_max", static_cast<double>(res.back().residual)}};
        b.property(std::string("ladder_limit/") + (sign == LadderSign::plus ? "L+" : "L-") + "/n=" + detail::padded(n, 2) +
                       "/r=" + detail::num(r),
                   p, worst_ratio, monotone, "value is the worst ratio per doubling of R");
      }

  const Real gate_rel = cc.mehler_rel_tol, gate_abs = cc.mehler_abs_tol;
  for (int m = 0; m <= cc.legendre_max_m; ++m)
    for (double r : cc.legendre_r) {
      const auto pts = mehler_heine_check(m, r, cc.l_values);
      const std::string tag = "/m=" + std::to_string(m) + "/r=" + detail::num(r);
      const double tol = static_cast<double>(gate_rel * std::abs(pts.back().bessel) + gate_abs);
      b.numeric("mehler_heine/final" + tag,
                {{"m", m}, {"r", r}, {"l", pts.back().l}, {"J_m", static_cast<double>(pts.back().bessel)}},
                static_cast<double>(pts.back().error), tol, "l^{-m} P^m_l(cos(r/l)) against J_m(r)");
      bool decreasing = true;
      for (std::size_t k = 1; k < pts.size(); ++k) decreasing = decreasing && pts[k].error < pts[k - 1].error;
      b.property("mehler_heine/monotone" + tag, {{"m", m}, {"r", r}}, static_cast<double>(pts.back().error), decreasing);

      for (std::size_t k = 1; k < cc.l_values.size(); ++k) {
        const int l0 = cc.l_values[k - 1], l1 = cc.l_values[k];
        const Real a = legendre_ode_residual(l0, m, r), c = legendre_ode_residual(l1, m, r);
        const double ratio = static_cast<double>(c / a);
        b.property("legendre_ode_rate" + tag + "/l=" + detail::padded(l1, 4),
                   {{"m", m}, {"r", r}, {"l_from", l0}, {"l_to", l1}, {"residual_from", static_cast<double>(a)},
                    {"residual_to", static_cast<double>(c)}, {"ratio_max", cc.legendre_ratio_max}},
                   ratio, ratio <= cc.legendre_ratio_max);
      }
      b.numeric("bessel_equation" + tag, {{"m", m}, {"r", r}}, static_cast<double>(bessel_equation_residual(m, r)), 1e-9);
    }
  return b.finish();
}

// ---------------------------------------------------------------- diagnostics

inline SuiteReport run_diagnostics(const SuiteConfig& cfg) {
  using namespace bessel;
  SuiteBuilder b("diagnostics");
  struct Point {
    int n;
    Real r, phi, t;
  };
  for (const auto& pt : {Point{0, 2, 0.5L, 0}, Point{0, 2, 0.5L, 0.2L}, Point{1, 3, 1, 0.1L}, Point{2, 1.5L, 0.8L, -0.25L}}) {
    const auto rep = genfunc_a12_diagnostic(pt.n, pt.r, pt.phi, pt.t, cfg.bessel.genfunc_terms);
    const json p{{"n", pt.n}, {"r", static_cast<double>(pt.r)}, {"phi", static_cast<double>(pt.phi)},
                 {"t", static_cast<double>(pt.t)}, {"M", rep.terms}, {"smaller", rep.smaller_residual()}};
    const std::string id = "genfunc_A12/n=" + std::to_string(pt.n) + "/r=" + detail::num(static_cast<double>(pt.r)) +
                           "/phi=" + detail::num(static_cast<double>(pt.phi)) + "/t=" + detail::num(static_cast<double>(pt.t));
    b.diagnostic(id + "/paper_form", p, static_cast<double>(rep.residual_paper_form));
    b.diagnostic(id + "/corrected_form", p, static_cast<double>(rep.residual_corrected_form));
    b.diagnostic(id + "/exact_flow_form", p, static_cast<double>(rep.residual_exact_flow));
  }

  const auto& d = cfg.diagnostics;
  const auto flow = flow_solve(d.flow_r0, d.flow_phi0, d.flow_t, d.flow_steps);
  const auto [r_exact, phi_exact] = flow_exact(d.flow_r0, d.flow_phi0, d.flow_t);
  const json p{{"r0", d.flow_r0},
               {"phi0", d.flow_phi0},
               {"t", d.flow_t},
               {"steps", d.flow_steps},
               {"r_re", static_cast<double>(flow.endpoint.r.real())},
               {"r_im", static_cast<double>(flow.endpoint.r.imag())},
               {"phi_re", static_cast<double>(flow.endpoint.phi.real())},
               {"phi_im", static_cast<double>(flow.endpoint.phi.imag())},
               {"closed_r", static_cast<double>(flow.closed_r)},
               {"closed_phi", static_cast<double>(flow.closed_phi)}};
  b.diagnostic("flow/closed_form_discrepancy/r", p, static_cast<double>(flow.discrepancy_r));
  b.diagnostic("flow/closed_form_discrepancy/phi", p, static_cast<double>(flow.discrepancy_phi));
  b.diagnostic("flow/exact_solution_discrepancy/r", p, static_cast<double>(std::abs(flow.endpoint.r - r_exact)),
               "r^2 = r0^2 + 2 t r0 e^{i phi0}");
  b.diagnostic("flow/exact_solution_discrepancy/phi", p, static_cast<double>(std::abs(flow.endpoint.phi - phi_exact)));
  b.diagnostic("flow/q_deviation", p, static_cast<double>(std::abs(flow.endpoint.q - Complex(1))));
  return b.finish();
}

// ---------------------------------------------------------------- dispatch

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"groups", "hermite", "bessel", "contraction", "all"};
  return names;
}

inline RunReport run_suite(const std::string& name, const SuiteConfig& cfg, bool timing = false) {
  const auto start = std::chrono::steady_clock::now();
  RunReport out;
  out.config = config_to_json(cfg);
  auto want = [&](const char* s) { return name == "all" || name == s; };
  if (want("groups")) out.suites.push_back(run_groups(cfg));
  if (want("hermite")) out.suites.push_back(run_hermite(cfg));
  if (want("bessel")) out.suites.push_back(run_bessel(cfg));
  if (want("contraction")) out.suites.push_back(run_contraction(cfg));
  if (name == "all") out.suites.push_back(run_diagnostics(cfg));
  if (out.suites.empty()) throw ConfigError("unknown suite '" + name + "'");
  if (timing)
    out.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace liegen::cli
