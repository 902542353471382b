#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "liegen/groups/euclidean_group.hpp"
#include "liegen/groups/heisenberg_group.hpp"

namespace liegen::groups {

enum class GroupKind { H3, E2 };

inline const char* group_name(GroupKind g) { return g == GroupKind::H3 ? "H3" : "E2"; }

/// Parametrized 3x3 matrix of the group as a function of its three
/// parameters, in floating point (used for finite differences).
inline Matrix3<Real> parametrized_matrix(GroupKind group, const std::array<Real, 3>& p) {
  if (group == GroupKind::E2) return E2Element(p[0], p[1], p[2]).matrix();
  Matrix3<Real> m = Matrix3<Real>::identity();
  m(0, 1) = p[0];
  m(0, 2) = p[1];
  m(1, 2) = p[2];
  return m;
}

/// Exact infinitesimal generator: A, B, C for H3; P_x, P_y and the rotation
/// generator for E2 (parameters x, y, theta).
inline Matrix3<Rational> exact_generator(GroupKind group, int param_index) {
  if (param_index < 1 || param_index > 3) throw std::out_of_range("parameter index must be 1..3");
  if (group == GroupKind::H3) {
    switch (param_index) {
      case 1: return h3_basis_A();
      case 2: return h3_basis_B();
      default: return h3_basis_C();
    }
  }
  switch (param_index) {
    case 1: return e2_generator_Px();
    case 2: return e2_generator_Py();
    default: return e2_generator_rotation();
  }
}

inline constexpr Real kGeneratorStep = 1e-5L;

/// Central finite-difference derivative of the parametrized matrix at the identity.
inline Matrix3<Real> generators_at_identity(GroupKind group, int param_index, Real h = kGeneratorStep) {
  if (param_index < 1 || param_index > 3) throw std::out_of_range("parameter index must be 1..3");
  std::array<Real, 3> plus{0, 0, 0}, minus{0, 0, 0};
  plus[static_cast<std::size_t>(param_index - 1)] = h;
  minus[static_cast<std::size_t>(param_index - 1)] = -h;
  return (1 / (2 * h)) * (parametrized_matrix(group, plus) - parametrized_matrix(group, minus));
}

/// Maximum residual per group axiom over a pseudorandom sample. H3 residuals
/// are exact (a nonzero value means a violated identity); E2 residuals are
/// max absolute matrix-entry deviations.
struct AxiomReport {
  GroupKind group = GroupKind::H3;
  std::size_t samples = 0;
  Real closure = 0;
  Real associativity = 0;
  Real identity = 0;
  Real inverse = 0;
  /// Parameter-space composition against matrix-space composition.
  Real homomorphism = 0;

  Real max_residual() const { return std::max({closure, associativity, identity, inverse, homomorphism}); }
};

namespace detail {

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  return Rational(num(rng), den(rng));
}

inline H3Element random_h3(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline E2Element random_e2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> t(-5, 5), a(0, 2 * std::numbers::pi);
  return {t(rng), t(rng), a(rng)};
}

inline Real exact_residual(const Matrix3<Rational>& d) {
  Real m = 0;
  for (const auto& v : d.a) m = std::max(m, std::fabs(to_real(v)));
  return m;
}

/// Deviation of a matrix from the E2 form: orthogonal rotation block with
/// determinant 1 and bottom row (0, 0, 1).
inline Real e2_form_defect(const Matrix3<Real>& m) {
  const Real c0 = m(0, 0), s0 = m(1, 0), c1 = m(0, 1), s1 = m(1, 1);
  Real d = std::fabs(c0 * c0 + s0 * s0 - 1);
  d = std::max(d, std::fabs(c1 * c1 + s1 * s1 - 1));
  d = std::max(d, std::fabs(c0 * c1 + s0 * s1));
  d = std::max(d, std::fabs(c0 * s1 - s0 * c1 - 1));
  d = std::max({d, std::fabs(m(2, 0)), std::fabs(m(2, 1)), std::fabs(m(2, 2) - 1)});
  return d;
}

}  // namespace detail

/// Checks closure, associativity, identity and inverse on `samples` random
/// elements (triples for associativity). Deterministic for a given seed.
inline AxiomReport axiom_suite(GroupKind group, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("axiom_suite needs at least one sample");
  std::mt19937_64 rng(seed);
  AxiomReport r;
  r.group = group;
  r.samples = samples;
  if (group == GroupKind::H3) {
    const auto I = Matrix3<Rational>::identity();
    for (std::size_t s = 0; s < samples; ++s) {
      const auto g = detail::random_h3(rng), h = detail::random_h3(rng), k = detail::random_h3(rng);
      const auto gh = h3_compose(g, h);
      // closure: the matrix product is again upper unitriangular
      const auto prod = g.matrix() * h.matrix();
      try {
        (void)H3Element::from_matrix(prod);
      } catch (const std::invalid_argument&) {
        r.closure = std::max(r.closure, Real(1));
      }
      r.homomorphism = std::max(r.homomorphism, detail::exact_residual(gh.matrix() - prod));
      r.associativity = std::max(
          r.associativity,
          detail::exact_residual(h3_compose(gh, k).matrix() - h3_compose(g, h3_compose(h, k)).matrix()));
      r.identity = std::max({r.identity, detail::exact_residual(h3_compose(H3Element::identity(), g).matrix() - g.matrix()),
                             detail::exact_residual(h3_compose(g, H3Element::identity()).matrix() - g.matrix())});
      r.inverse = std::max({r.inverse, detail::exact_residual(h3_compose(g, h3_inverse(g)).matrix() - I),
                            detail::exact_residual(h3_compose(h3_inverse(g), g).matrix() - I),
                            detail::exact_residual(h3_inverse(g).matrix() * g.matrix() - I)});
    }
    return r;
  }
  const auto I = Matrix3<Real>::identity();
  for (std::size_t s = 0; s < samples; ++s) {
    const auto g = detail::random_e2(rng), h = detail::random_e2(rng), k = detail::random_e2(rng);
    const auto gh = e2_compose(g, h);
    const auto prod = g.matrix() * h.matrix();
    r.closure = std::max(r.closure, detail::e2_form_defect(prod));
    r.homomorphism = std::max(r.homomorphism, max_abs_diff(gh.matrix(), prod));
    r.associativity = std::max(r.associativity, max_abs_diff((g.matrix() * h.matrix()) * k.matrix(),
                                                             g.matrix() * (h.matrix() * k.matrix())));
    r.associativity = std::max(r.associativity,
                               max_abs_diff(e2_compose(gh, k).matrix(), e2_compose(g, e2_compose(h, k)).matrix()));
    r.identity = std::max({r.identity, max_abs_diff(e2_compose(E2Element::identity(), g).matrix(), g.matrix()),
                           max_abs_diff(e2_compose(g, E2Element::identity()).matrix(), g.matrix())});
    r.inverse = std::max({r.inverse, max_abs_diff(e2_compose(g, e2_inverse(g)).matrix(), I),
                          max_abs_diff(e2_compose(e2_inverse(g), g).matrix(), I),
                          max_abs_diff(e2_inverse(g).matrix() * g.matrix(), I)});
  }
  return r;
}

}  // namespace liegen::groups
