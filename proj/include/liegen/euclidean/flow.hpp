#pragma once

#include <array>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liegen/numeric/rational.hpp"

namespace liegen::bessel {

struct FlowState {
  Complex r;
  Complex phi;
  Complex q = 1;
  Real t = 0;
};

class FlowSingularity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultFlowSteps = 10000;
inline constexpr Real kFlowMinRadius = 1e-6L;

struct FlowReport {
  std::vector<FlowState> trajectory;  // initial state then one entry per step
  FlowState endpoint;
  Real closed_r = 0;       // sqrt(2 r0 phi0 t + r0^2)
  Real closed_phi = 0;     // r0 phi0 / closed_r
  Real discrepancy_r = 0;  // |r(t_end) - closed_r|
  Real discrepancy_phi = 0;
};

/// Exact solution of the flow: r e^{i phi} is conserved and r e^{-i phi}
/// grows like 2t, so r^2 = r0^2 + 2 t r0 e^{i phi0} and
/// phi = phi0 - i log(r0 / r) on the branch continuous from t = 0.
inline std::pair<Complex, Complex> flow_exact(Real r0, Real phi0, const Complex& t) {
  const Complex r = std::sqrt(r0 * r0 + Real(2) * t * std::polar(r0, phi0));
  return {r, phi0 - Complex(0, 1) * std::log(r0 / r)};
}

/// Classical RK4 on dr/dt = e^{i phi}, dphi/dt = i e^{i phi} / r, dq/dt = 0.
inline FlowReport flow_solve(Real r0, Real phi0, Real t_end, std::size_t steps = kDefaultFlowSteps) {
  if (!(r0 > 0)) throw std::invalid_argument("flow needs r0 > 0");
  if (phi0 == 0) throw std::invalid_argument("flow needs phi0 != 0");
  if (steps == 0) throw std::invalid_argument("flow needs at least one step");

  using Vec = std::array<Complex, 2>;
  const Complex i(0, 1);
  auto rhs = [&](const Vec& s) -> Vec {
    if (std::abs(s[0]) < kFlowMinRadius) throw FlowSingularity("flow radius fell below 1e-6");
    const Complex e = std::exp(i * s[1]);
    return {e, i * e / s[0]};
  };
  auto axpy = [](const Vec& s, const Vec& k, Real h) { return Vec{s[0] + h * k[0], s[1] + h * k[1]}; };

  FlowReport out;
  out.trajectory.reserve(steps + 1);
  Vec s{Complex(r0), Complex(phi0)};
  out.trajectory.push_back({s[0], s[1], 1, 0});
  const Real h = t_end / static_cast<Real>(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const Vec k1 = rhs(s);
    const Vec k2 = rhs(axpy(s, k1, h / 2));
    const Vec k3 = rhs(axpy(s, k2, h / 2));
    const Vec k4 = rhs(axpy(s, k3, h));
    for (int c = 0; c < 2; ++c) s[c] += h / 6 * (k1[c] + Real(2) * k2[c] + Real(2) * k3[c] + k4[c]);
    rhs(s);  // radius guard at the accepted state
    out.trajectory.push_back({s[0], s[1], 1, h * static_cast<Real>(k + 1)});
  }
  out.endpoint = out.trajectory.back();
  out.endpoint.t = t_end;

  const Real radicand = 2 * r0 * phi0 * t_end + r0 * r0;
  if (radicand > 0) {
    out.closed_r = std::sqrt(radicand);
    out.closed_phi = r0 * phi0 / out.closed_r;
    out.discrepancy_r = std::abs(out.endpoint.r - out.closed_r);
    out.discrepancy_phi = std::abs(out.endpoint.phi - out.closed_phi);
  } else {
    out.closed_r = out.closed_phi = std::numeric_limits<Real>::quiet_NaN();
    out.discrepancy_r = out.discrepancy_phi = std::numeric_limits<Real>::quiet_NaN();
  }
  return out;
}

}  // namespace liegen::bessel
