// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <cmath>
#include <random>

#include "aledg/euler.hpp"

namespace oracles {

using aledg::ConservedState;
using aledg::GasModel;
using aledg::Mat3;
using aledg::PrimitiveState;

/// Central-difference Jacobian of the physical flux, step scaled per
/// component.
inline Mat3 fd_flux_jacobian(const ConservedState& u, const GasModel& gas, double eps = 1e-6) {
  Mat3 a;
  for (int j = 0; j < 3; ++j) {
    ConservedState up = u, um = u;
    const double h = eps * std::max(1.0, std::abs(u[j]));
    up[j] += h;
    um[j] -= h;
    const ConservedState fp = aledg::physical_flux(up, gas);
    const ConservedState fm = aledg::physical_flux(um, gas);
    for (int i = 0; i < 3; ++i) a.m[i][j] = (fp[i] - fm[i]) / (2.0 * h);
  }
  return a;
}

/// f(u) - f(u_ref) recovered by integrating the finite-difference Jacobian
/// along the straight ray between the states (composite Gauss quadrature).
inline ConservedState flux_by_ray_integral(const ConservedState& u_ref, const ConservedState& u,
                                           const GasModel& gas) {
  static const double gp[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                               0.8611363115940526};
  static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                               0.3478548451374538};
  const ConservedState d = u - u_ref;
  ConservedState total = aledg::physical_flux(u_ref, gas);
  const int panels = 32;
  for (int p = 0; p < panels; ++p) {
    const double s0 = static_cast<double>(p) / panels;
    const double s1 = static_cast<double>(p + 1) / panels;
    for (int q = 0; q < 4; ++q) {
      const double s = 0.5 * (s0 + s1) + 0.5 * (s1 - s0) * gp[q];
      const Mat3 a = fd_flux_jacobian(u_ref + s * d, gas, 1e-7);
      total += (0.5 * (s1 - s0) * gw[q]) * a.apply(d);
    }
  }
  return total;
}

/// Textbook static-mesh Rusanov flux.
inline ConservedState textbook_rusanov(const ConservedState& ul, const ConservedState& ur,
                                       const GasModel& gas) {
  const PrimitiveState pl = aledg::to_primitive(ul, gas);
  const PrimitiveState pr = aledg::to_primitive(ur, gas);
  const double lam = std::max(std::abs(pl.vel) + aledg::sound_speed(pl, gas),
                              std::abs(pr.vel) + aledg::sound_speed(pr, gas));
  return 0.5 * (aledg::physical_flux(ul, gas) + aledg::physical_flux(ur, gas)) -
         0.5 * lam * (ur - ul);
}

/// Galilean boost of a conserved state by frame velocity v.
inline ConservedState boost_state(const ConservedState& u, double v) {
  return {u.rho, u.mom + v * u.rho, u.ener + v * u.mom + 0.5 * v * v * u.rho};
}

/// Matching transformation of an ALE flux vector under the same boost.
inline ConservedState boost_flux(const ConservedState& g, double v) {
  return {g.rho, g.mom + v * g.rho, g.ener + v * g.mom + 0.5 * v * v * g.rho};
}

struct StateGen {
  std::mt19937 rng;
  explicit StateGen(unsigned seed) : rng(seed) {}

  PrimitiveState primitive() {
    std::uniform_real_distribution<double> logu(-1.0, 1.0);
    std::uniform_real_distribution<double> vel(-5.0, 5.0);
    return {std::pow(10.0, logu(rng)), vel(rng), std::pow(10.0, 2.0 * logu(rng))};
  }

  ConservedState conserved(const GasModel& gas) { return aledg::to_conserved(primitive(), gas); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
};

}  // namespace oracles
