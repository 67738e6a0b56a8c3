#pragma once

#include <array>
#include <cmath>

#include "aledg/errors.hpp"

namespace aledg {

/// Ideal-gas context. gamma is the ratio of specific heats and must be > 1.
struct GasModel {
  double gamma = 1.4;

  double gm1() const { return gamma - 1.0; }
};

/// Conserved variables (rho, rho*v, E). The same layout serves as a generic
/// 3-vector for fluxes and other quantities that combine linearly.
struct ConservedState {
  double rho = 0.0;   // mass density
  double mom = 0.0;   // momentum density
  double ener = 0.0;  // total energy density

  double operator[](int i) const { return i == 0 ? rho : (i == 1 ? mom : ener); }
  double& operator[](int i) { return i == 0 ? rho : (i == 1 ? mom : ener); }

  ConservedState& operator+=(const ConservedState& o) {
    rho += o.rho;
    mom += o.mom;
    ener += o.ener;
    return *this;
  }
  ConservedState& operator-=(const ConservedState& o) {
    rho -= o.rho;
    mom -= o.mom;
    ener -= o.ener;
    return *this;
  }
  ConservedState& operator*=(double a) {
    rho *= a;
    mom *= a;
    ener *= a;
    return *this;
  }
};

using FluxVector = ConservedState;

inline ConservedState operator+(ConservedState a, const ConservedState& b) { return a += b; }
inline ConservedState operator-(ConservedState a, const ConservedState& b) { return a -= b; }
inline ConservedState operator*(ConservedState a, double s) { return a *= s; }
inline ConservedState operator*(double s, ConservedState a) { return a *= s; }
inline ConservedState operator/(ConservedState a, double s) { return a *= 1.0 / s; }
inline ConservedState operator-(const ConservedState& a) { return {-a.rho, -a.mom, -a.ener}; }

/// Primitive variables (rho, v, p).
struct PrimitiveState {
  double rho = 0.0;
  double vel = 0.0;
  double pre = 0.0;
};

struct Mat3 {
  double m[3][3] = {};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  ConservedState apply(const ConservedState& u) const {
    ConservedState r;
    for (int i = 0; i < 3; ++i)
      r[i] = m[i][0] * u[0] + m[i][1] * u[1] + m[i][2] * u[2];
    return r;
  }

  Mat3 mul(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
    return r;
  }
};

/// Eigen-decomposition of the flux Jacobian at a given state: A = R Lambda L
/// with L = R^{-1} and Lambda = diag(v-c, v, v+c).
struct EigenSystem {
  std::array<double, 3> lambdas{};
  Mat3 right;
  Mat3 left;
};

inline ConservedState to_conserved(const PrimitiveState& w, const GasModel& gas) {
  if (!(w.rho > 0.0) || !(w.pre > 0.0))
    throw NonPhysicalState("to_conserved: rho or p not positive");
  return {w.rho, w.rho * w.vel, w.pre / gas.gm1() + 0.5 * w.rho * w.vel * w.vel};
}

inline PrimitiveState to_primitive(const ConservedState& u, const GasModel& gas) {
  if (!(u.rho > 0.0)) throw NonPhysicalState("to_primitive: non-positive density");
  const double v = u.mom / u.rho;
  const double p = gas.gm1() * (u.ener - 0.5 * u.mom * v);
  if (!(p > 0.0)) throw NonPhysicalState("to_primitive: non-positive pressure");
  return {u.rho, v, p};
}

/// Pressure of a conserved state without positivity checks. NaN-safe callers
/// only; the positivity limiter uses this.
inline double pressure_raw(const ConservedState& u, const GasModel& gas) {
  return gas.gm1() * (u.ener - 0.5 * u.mom * u.mom / u.rho);
}

inline double sound_speed(const PrimitiveState& w, const GasModel& gas) {
  const double c2 = gas.gamma * w.pre / w.rho;
  if (!(c2 > 0.0)) throw NonPhysicalState("sound_speed: c^2 not positive");
  return std::sqrt(c2);
}

/// Specific enthalpy H = (E + p) / rho.
inline double enthalpy(const PrimitiveState& w, const GasModel& gas) {
  return gas.gamma * w.pre / (w.rho * gas.gm1()) + 0.5 * w.vel * w.vel;
}

/// Flux f(U) = (rho v, p + rho v^2, rho H v).
inline FluxVector physical_flux(const ConservedState& u, const GasModel& gas) {
  const PrimitiveState w = to_primitive(u, gas);
  return {u.mom, w.pre + u.mom * w.vel, (u.ener + w.pre) * w.vel};
}

inline FluxVector physical_flux(const PrimitiveState& w, const GasModel& gas) {
  const ConservedState u = to_conserved(w, gas);
  return {u.mom, w.pre + u.mom * w.vel, (u.ener + w.pre) * w.vel};
}

/// Flux seen by a face moving with velocity w: g(u, w) = f(u) - w u.
inline FluxVector ale_flux(const ConservedState& u, double w, const GasModel& gas) {
  return physical_flux(u, gas) - w * u;
}

/// Analytic flux Jacobian A(U) = f'(U).
inline Mat3 flux_jacobian(const ConservedState& u, const GasModel& gas) {
  const PrimitiveState w = to_primitive(u, gas);
  const double g = gas.gamma;
  const double v = w.vel;
  const double H = enthalpy(w, gas);
  Mat3 a;
  a.m[0][0] = 0.0;
  a.m[0][1] = 1.0;
  a.m[0][2] = 0.0;
  a.m[1][0] = 0.5 * (g - 3.0) * v * v;
  a.m[1][1] = (3.0 - g) * v;
  a.m[1][2] = g - 1.0;
  a.m[2][0] = v * (0.5 * (g - 1.0) * v * v - H);
  a.m[2][1] = H - (g - 1.0) * v * v;
  a.m[2][2] = g * v;
  return a;
}

/// Eigen-decomposition from the primitive quantities (v, H, c). The columns
/// of R are (1, v-c, H-vc), (1, v, v^2/2), (1, v+c, H+vc).
inline EigenSystem eigensystem_from(double v, double H, double c, const GasModel& gas) {
  EigenSystem e;
  e.lambdas = {v - c, v, v + c};

  Mat3& r = e.right;
  r.m[0][0] = 1.0;
  r.m[0][1] = 1.0;
  r.m[0][2] = 1.0;
  r.m[1][0] = v - c;
  r.m[1][1] = v;
  r.m[1][2] = v + c;
  r.m[2][0] = H - v * c;
  r.m[2][1] = 0.5 * v * v;
  r.m[2][2] = H + v * c;

  const double b1 = gas.gm1() / (c * c);
  const double b2 = 0.5 * b1 * v * v;
  Mat3& l = e.left;
  l.m[0][0] = 0.5 * (b2 + v / c);
  l.m[0][1] = -0.5 * (b1 * v + 1.0 / c);
  l.m[0][2] = 0.5 * b1;
  l.m[1][0] = 1.0 - b2;
  l.m[1][1] = b1 * v;
  l.m[1][2] = -b1;
  l.m[2][0] = 0.5 * (b2 - v / c);
  l.m[2][1] = -0.5 * (b1 * v - 1.0 / c);
  l.m[2][2] = 0.5 * b1;
  return e;
}

inline EigenSystem eigensystem(const PrimitiveState& w, const GasModel& gas) {
  const double c = sound_speed(w, gas);
  return eigensystem_from(w.vel, enthalpy(w, gas), c, gas);
}

}  // namespace aledg
