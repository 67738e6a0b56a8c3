#pragma once

#include <algorithm>
#include <cmath>

#include "aledg/euler.hpp"

namespace aledg {

enum class FluxKind { Rusanov, Roe, Hllc };

struct FluxScheme {
  FluxKind kind = FluxKind::Rusanov;
  // Contact-eigenvalue fix threshold delta = alpha * c for the Roe flux;
  // 0 disables the fix.
  double roe_fix_alpha = 0.1;
};

struct FaceFluxResult {
  FluxVector flux{};
  double max_speed = 0.0;
};

/// Largest signal speed estimate, max(|vl - w| + cl, |vr - w| + cr).
inline double rusanov_speed(const PrimitiveState& l, const PrimitiveState& r, double w,
                            const GasModel& gas) {
  return std::max(std::abs(l.vel - w) + sound_speed(l, gas),
                  std::abs(r.vel - w) + sound_speed(r, gas));
}

inline FaceFluxResult rusanov(const ConservedState& ul, const ConservedState& ur, double w,
                              const GasModel& gas) {
  const PrimitiveState pl = to_primitive(ul, gas);
  const PrimitiveState pr = to_primitive(ur, gas);
  const double lam = rusanov_speed(pl, pr, w, gas);
  const FluxVector g =
      0.5 * (ale_flux(ul, w, gas) + ale_flux(ur, w, gas)) - 0.5 * lam * (ur - ul);
  return {g, lam};
}

/// Averages built from the Roe parameter vector z = sqrt(rho) (1, v, H).
struct RoeAverage {
  double vel = 0.0;
  double enthalpy = 0.0;
  double sound = 0.0;
};

inline RoeAverage roe_average(const PrimitiveState& l, const PrimitiveState& r,
                              const GasModel& gas) {
  const double sl = std::sqrt(l.rho);
  const double sr = std::sqrt(r.rho);
  const double v = (sl * l.vel + sr * r.vel) / (sl + sr);
  const double H = (sl * enthalpy(l, gas) + sr * enthalpy(r, gas)) / (sl + sr);
  const double c2 = gas.gm1() * (H - 0.5 * v * v);
  if (!(c2 > 0.0)) throw RoeAverageFailure("roe_average: non-positive c^2");
  return {v, H, std::sqrt(c2)};
}

/// Roe flux with |A_w| = R |Lambda - w I| R^{-1} at the Roe average state.
/// The contact eigenvalue |v - w| is kept away from zero,
///   |lam2| -> (delta + |v - w|^2 / delta) / 2 when |v - w| <= delta = alpha c,
/// which suppresses spurious contact waves on nearly Lagrangian meshes. The
/// acoustic eigenvalues need no entropy fix here.
inline FaceFluxResult roe(const ConservedState& ul, const ConservedState& ur, double w,
                          const GasModel& gas, double alpha) {
  const PrimitiveState pl = to_primitive(ul, gas);
  const PrimitiveState pr = to_primitive(ur, gas);
  const RoeAverage avg = roe_average(pl, pr, gas);
  const EigenSystem eig = eigensystem_from(avg.vel, avg.enthalpy, avg.sound, gas);

  double a1 = std::abs(eig.lambdas[0] - w);
  double a2 = std::abs(eig.lambdas[1] - w);
  double a3 = std::abs(eig.lambdas[2] - w);
  if (alpha > 0.0) {
    const double delta = alpha * avg.sound;
    if (a2 <= delta) a2 = 0.5 * (delta + a2 * a2 / delta);
  }

  const ConservedState jump = eig.left.apply(ur - ul);
  const ConservedState scaled{a1 * jump.rho, a2 * jump.mom, a3 * jump.ener};
  const ConservedState diss = eig.right.apply(scaled);
  const FluxVector g = 0.5 * (ale_flux(ul, w, gas) + ale_flux(ur, w, gas)) - 0.5 * diss;
  return {g, std::abs(avg.vel - w) + avg.sound};
}

/// HLLC three-wave flux in the frame of a face moving with velocity w.
/// Signal speeds combine the outer trace speeds with the Roe average; the
/// star states and p* follow the standard contact-restoring construction.
inline FaceFluxResult hllc(const ConservedState& ul, const ConservedState& ur, double w,
                           const GasModel& gas) {
  const PrimitiveState pl = to_primitive(ul, gas);
  const PrimitiveState pr = to_primitive(ur, gas);
  const double cl = sound_speed(pl, gas);
  const double cr = sound_speed(pr, gas);
  const double vtl = pl.vel - w;
  const double vtr = pr.vel - w;
  const RoeAverage avg = roe_average(pl, pr, gas);

  const double sl = std::min(vtl - cl, avg.vel - w - avg.sound);
  const double sr = std::max(vtr + cr, avg.vel - w + avg.sound);
  const double max_speed = std::max(std::abs(sl), std::abs(sr));

  if (sl > 0.0) return {ale_flux(ul, w, gas), max_speed};
  if (sr < 0.0) return {ale_flux(ur, w, gas), max_speed};

  const double scale = std::max({std::abs(sl), std::abs(sr), 1.0});
  if (std::abs(sr - sl) <= 1e-14 * scale) return {ale_flux(ul, w, gas), max_speed};

  const double num =
      pr.rho * vtr * (sr - vtr) - pl.rho * vtl * (sl - vtl) + pl.pre - pr.pre;
  const double den = pr.rho * (sr - vtr) - pl.rho * (sl - vtl);
  const double sm = num / den;
  const double p_star = pl.rho * (vtl - sl) * (vtl - sm) + pl.pre;

  const bool use_left = sm >= 0.0;
  const ConservedState& u = use_left ? ul : ur;
  const PrimitiveState& p = use_left ? pl : pr;
  const double s = use_left ? sl : sr;
  const double vt = use_left ? vtl : vtr;

  const ConservedState u_star{(s - vt) * u.rho / (s - sm),
                              ((s - vt) * u.mom + p_star - p.pre) / (s - sm),
                              ((s - vt) * u.ener - p.pre * vt + p_star * sm) / (s - sm)};
  const FluxVector g = sm * u_star + ConservedState{0.0, p_star, (sm + w) * p_star};
  return {g, max_speed};
}

inline FaceFluxResult numerical_flux(const FluxScheme& scheme, const ConservedState& ul,
                                     const ConservedState& ur, double w, const GasModel& gas) {
  switch (scheme.kind) {
    case FluxKind::Rusanov: return rusanov(ul, ur, w, gas);
    case FluxKind::Roe: return roe(ul, ur, w, gas, scheme.roe_fix_alpha);
    case FluxKind::Hllc: return hllc(ul, ur, w, gas);
  }
  return rusanov(ul, ur, w, gas);
}

}  // namespace aledg
