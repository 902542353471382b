#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "liegen/euclidean/bessel.hpp"

namespace liegen::contraction {

inline constexpr int kLegendreMaxDegree = 4096;

/// P^m_l(x) without the Condon-Shortley phase, by the forward degree
/// recurrence seeded with P^m_m = (2m-1)!! (1-x^2)^{m/2}.
inline Real assoc_legendre(int l, int m, Real x) {
  if (m < 0 || m > l) throw std::invalid_argument("assoc_legendre needs 0 <= m <= l");
  if (l > kLegendreMaxDegree) throw EnvelopeError("assoc_legendre degree above 4096");
  if (std::abs(x) > 1) throw std::invalid_argument("assoc_legendre needs |x| <= 1");
  Real pmm = 1;
  const Real s = std::sqrt((1 - x) * (1 + x));
  for (int k = 1; k <= m; ++k) pmm *= (2 * k - 1) * s;
  if (l == m) return pmm;
  Real prev = pmm, cur = (2 * m + 1) * x * pmm;
  for (int k = m + 1; k < l; ++k) {
    const Real next = ((2 * k + 1) * x * cur - (k + m) * prev) / (k - m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

inline constexpr int kMehlerMaxM = 5;
inline constexpr Real kMehlerMinR = 0.5L, kMehlerMaxR = 8;

struct MehlerHeinePoint {
  int l = 0;
  Real scaled_legendre = 0;  // l^{-m} P^m_l(cos(r / l))
  Real bessel = 0;           // J_m(r)
  Real error = 0;
};

/// |l^{-m} P^m_l(cos(r/l)) - J_m(r)| for each l.
inline std::vector<MehlerHeinePoint> mehler_heine_check(int m, Real r, const std::vector<int>& l_list) {
  if (m < 0 || m > kMehlerMaxM) throw EnvelopeError("mehler-heine check needs 0 <= m <= 5");
  if (r < kMehlerMinR || r > kMehlerMaxR) throw EnvelopeError("mehler-heine check needs 0.5 <= r <= 8");
  const Real j = bessel::bessel_j(m, r);
  std::vector<MehlerHeinePoint> out;
  for (int l : l_list) {
    if (l < m) throw std::invalid_argument("mehler-heine check needs l >= m");
    const Real p = assoc_legendre(l, m, std::cos(r / l)) / std::pow(Real(l), m);
    out.push_back({l, p, j, std::abs(p - j)});
  }
  return out;
}

/// [(1/sin) d/dtheta sin d/dtheta + l(l+1) - m^2/sin^2] J_m(l theta) at
/// theta = r / l, divided by l^2. Derivatives come from the Bessel series.
inline Real legendre_ode_residual(int l, int m, Real r) {
  if (l < 8) throw EnvelopeError("legendre ode residual needs l >= 8");
  if (r < kMehlerMinR || r > kMehlerMaxR) throw EnvelopeError("legendre ode residual needs 0.5 <= r <= 8");
  const Real theta = r / l;
  if (theta >= std::acos(Real(-1)) / 4) throw EnvelopeError("legendre ode residual needs theta < pi/4");
  const auto d = bessel::bessel_derivatives(m, Complex(r));
  const Real L = l, u = d.value.real(), du = L * d.first.real(), d2u = L * L * d.second.real();
  const Real sn = std::sin(theta);
  const Real op = d2u + std::cos(theta) / sn * du + L * (L + 1) * u - Real(m) * m / (sn * sn) * u;
  return std::abs(op) / (L * L);
}

/// [r d/dr r d/dr + r^2 - m^2] J_m(r) with series derivatives.
inline Real bessel_equation_residual(int m, Real r) {
  const auto d = bessel::bessel_derivatives(m, Complex(r));
  return std::abs(r * r * d.second + r * d.first + (r * r - Real(m) * m) * d.value);
}

}  // namespace liegen::contraction
