#pragma once

#include <cmath>

#include "aledg/euler.hpp"

namespace aledg {

/// Exact solution of the Riemann problem for the 1-D Euler equations.
/// sample(xi) returns the self-similar state at xi = x / t.
struct RiemannSolution {
  PrimitiveState left;
  PrimitiveState right;
  double gamma = 1.4;
  double p_star = 0.0;
  double v_star = 0.0;
  bool left_is_shock = false;
  bool right_is_shock = false;

  PrimitiveState sample(double xi) const {
    const double g = gamma;
    const double g1 = (g - 1.0) / (2.0 * g);
    const double g3 = 2.0 * g / (g - 1.0);
    const double g4 = 2.0 / (g - 1.0);
    const double g5 = 2.0 / (g + 1.0);
    const double g6 = (g - 1.0) / (g + 1.0);
    const double g7 = 0.5 * (g - 1.0);

    if (xi <= v_star) {
      const double cl = std::sqrt(g * left.pre / left.rho);
      const double pr_ratio = p_star / left.pre;
      if (left_is_shock) {
        const double s = left.vel - cl * std::sqrt((g + 1.0) / (2.0 * g) * pr_ratio + g1);
        if (xi <= s) return left;
        const double rho = left.rho * (pr_ratio + g6) / (g6 * pr_ratio + 1.0);
        return {rho, v_star, p_star};
      }
      const double head = left.vel - cl;
      const double c_star = cl * std::pow(pr_ratio, g1);
      const double tail = v_star - c_star;
      if (xi <= head) return left;
      if (xi >= tail) return {left.rho * std::pow(pr_ratio, 1.0 / g), v_star, p_star};
      const double v = g5 * (cl + g7 * left.vel + xi);
      const double c = g5 * (cl + g7 * (left.vel - xi));
      return {left.rho * std::pow(c / cl, g4), v, left.pre * std::pow(c / cl, g3)};
    }

    const double cr = std::sqrt(g * right.pre / right.rho);
    const double pr_ratio = p_star / right.pre;
    if (right_is_shock) {
      const double s = right.vel + cr * std::sqrt((g + 1.0) / (2.0 * g) * pr_ratio + g1);
      if (xi >= s) return right;
      const double rho = right.rho * (pr_ratio + g6) / (g6 * pr_ratio + 1.0);
      return {rho, v_star, p_star};
    }
    const double head = right.vel + cr;
    const double c_star = cr * std::pow(pr_ratio, g1);
    const double tail = v_star + c_star;
    if (xi >= head) return right;
    if (xi <= tail) return {right.rho * std::pow(pr_ratio, 1.0 / g), v_star, p_star};
    const double v = g5 * (-cr + g7 * right.vel + xi);
    const double c = g5 * (cr - g7 * (right.vel - xi));
    return {right.rho * std::pow(c / cr, g4), v, right.pre * std::pow(c / cr, g3)};
  }
};

namespace detail {

/// Toro's pressure function for one side and its derivative.
inline void pressure_fn(double p, const PrimitiveState& s, double g, double& f, double& df) {
  const double c = std::sqrt(g * s.pre / s.rho);
  if (p > s.pre) {
    const double a = 2.0 / ((g + 1.0) * s.rho);
    const double b = (g - 1.0) / (g + 1.0) * s.pre;
    const double root = std::sqrt(a / (p + b));
    f = (p - s.pre) * root;
    df = root * (1.0 - 0.5 * (p - s.pre) / (p + b));
  } else {
    const double g1 = (g - 1.0) / (2.0 * g);
    f = 2.0 * c / (g - 1.0) * (std::pow(p / s.pre, g1) - 1.0);
    df = std::pow(p / s.pre, -(g + 1.0) / (2.0 * g)) / (s.rho * c);
  }
}

}  // namespace detail

/// Safeguarded Newton iteration on the pressure function, converged to 1e-12
/// relative. Throws VacuumGenerated when the data admits no positive-pressure
/// solution.
inline RiemannSolution exact_riemann(const PrimitiveState& left, const PrimitiveState& right,
                                     double gamma) {
  if (!(left.rho > 0.0) || !(left.pre > 0.0) || !(right.rho > 0.0) || !(right.pre > 0.0))
    throw NonPhysicalState("exact_riemann: input states not physical");
  const double g = gamma;
  const double cl = std::sqrt(g * left.pre / left.rho);
  const double cr = std::sqrt(g * right.pre / right.rho);
  const double dv = right.vel - left.vel;
  if (2.0 / (g - 1.0) * (cl + cr) <= dv)
    throw VacuumGenerated("exact_riemann: vacuum generated");

  // Primitive-variable estimate, clipped to a small positive floor.
  double p = 0.5 * (left.pre + right.pre) -
             0.125 * dv * (left.rho + right.rho) * (cl + cr);
  p = std::max(p, 1e-12 * std::min(left.pre, right.pre));

  double fl, dfl, fr, dfr;
  for (int it = 0; it < 100; ++it) {
    detail::pressure_fn(p, left, g, fl, dfl);
    detail::pressure_fn(p, right, g, fr, dfr);
    const double diff = (fl + fr + dv) / (dfl + dfr);
    double next = p - diff;
    if (next <= 0.0) next = 0.5 * p;
    if (std::abs(next - p) <= 1e-12 * p) {
      p = next;
      break;
    }
    p = next;
  }

  detail::pressure_fn(p, left, g, fl, dfl);
  detail::pressure_fn(p, right, g, fr, dfr);

  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gamma = g;
  sol.p_star = p;
  sol.v_star = 0.5 * (left.vel + right.vel) + 0.5 * (fr - fl);
  sol.left_is_shock = p > left.pre;
  sol.right_is_shock = p > right.pre;
  return sol;
}

}  // namespace aledg
