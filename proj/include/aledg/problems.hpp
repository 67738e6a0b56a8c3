#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "aledg/adapt.hpp"
#include "aledg/flux.hpp"
#include "aledg/limiter.hpp"
#include "aledg/mesh.hpp"
#include "aledg/riemann.hpp"

namespace aledg {

enum class OracleKind { ClosedForm, RiemannExact, Characteristics, ReferenceOnly };

/// One catalog entry: initial data, domain, gas, final time, boundary
/// treatment, per-problem defaults and the kind of reference solution that is
/// available for error norms.
struct ProblemSpec {
  std::string name;
  double xmin = 0.0;
  double xmax = 1.0;
  GasModel gas;
  double t_end = 1.0;
  BoundaryKind left_bc = BoundaryKind::Transmissive;
  BoundaryKind right_bc = BoundaryKind::Transmissive;
  int default_cells = 100;
  FluxScheme default_flux{FluxKind::Hllc, 0.1};
  LimiterConfig default_limiter;
  AdaptConfig default_adapt;
  OracleKind oracle = OracleKind::ReferenceOnly;
  std::function<PrimitiveState(double)> initial;
  std::function<PrimitiveState(double, double)> exact;  // (x, t); may be empty
};

namespace detail {

inline std::function<PrimitiveState(double, double)> riemann_oracle(PrimitiveState l,
                                                                    PrimitiveState r,
                                                                    double gamma, double x0) {
  // The star solve is deferred so that building the catalog never throws.
  auto solution = std::make_shared<RiemannSolution>();
  auto solved = std::make_shared<bool>(false);
  return [=](double x, double t) {
    if (!*solved) {
      *solution = exact_riemann(l, r, gamma);
      *solved = true;
    }
    if (t <= 0.0) return x < x0 ? l : r;
    return solution->sample((x - x0) / t);
  };
}

/// gamma = 3 isentropic flow: both Riemann invariants v +- c obey Burgers'
/// equation, so pre-breaking states follow from tracing the two
/// characteristics back to t = 0.
inline PrimitiveState isentropic_exact(double x, double t) {
  const double sqrt3 = std::sqrt(3.0);
  auto c0 = [&](double xi) { return sqrt3 * (1.0 + 0.9999995 * std::sin(std::numbers::pi * xi)); };
  auto dc0 = [&](double xi) { return sqrt3 * 0.9999995 * std::numbers::pi * std::cos(std::numbers::pi * xi); };
  auto trace_back = [&](double sign) {
    double xi = x;
    for (int it = 0; it < 100; ++it) {
      const double f = xi + sign * c0(xi) * t - x;
      const double df = 1.0 + sign * dc0(xi) * t;
      const double step = f / df;
      xi -= step;
      if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
    }
    return sign * c0(xi);
  };
  const double wp = trace_back(+1.0);
  const double wm = trace_back(-1.0);
  const double v = 0.5 * (wp + wm);
  const double c = 0.5 * (wp - wm);
  const double rho = c / sqrt3;
  return {rho, v, rho * rho * rho};
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  return {"gaussian_advect", "isentropic_gamma3", "single_contact", "sod",   "lax",
          "shu_osher",       "titarev_toro",      "p123",           "blast", "leblanc"};
}

inline ProblemSpec catalog(const std::string& name) {
  ProblemSpec p;
  p.name = name;
  if (name == "gaussian_advect") {
    p.xmin = -5.0;
    p.xmax = 5.0;
    p.t_end = 1.0;
    p.default_flux = {FluxKind::Hllc, 0.1};
    p.default_limiter.mode = LimiterMode::Off;
    p.oracle = OracleKind::ClosedForm;
    p.initial = [](double x) {
      return PrimitiveState{1.0 + std::exp(-10.0 * x * x), 1.0, 1.0};
    };
    p.exact = [](double x, double t) {
      return PrimitiveState{1.0 + std::exp(-10.0 * (x - t) * (x - t)), 1.0, 1.0};
    };
  } else if (name == "isentropic_gamma3") {
    p.xmin = -1.0;
    p.xmax = 1.0;
    p.gas.gamma = 3.0;
    p.t_end = 0.1;  // before the invariants steepen into shocks
    p.left_bc = p.right_bc = BoundaryKind::Periodic;
    p.default_flux = {FluxKind::Roe, 0.0};
    p.default_limiter.mode = LimiterMode::Off;
    p.default_limiter.positivity = true;
    p.oracle = OracleKind::Characteristics;
    p.initial = [](double x) {
      const double rho = 1.0 + 0.9999995 * std::sin(std::numbers::pi * x);
      return PrimitiveState{rho, 0.0, rho * rho * rho};
    };
    p.exact = [](double x, double t) { return detail::isentropic_exact(x, t); };
  } else if (name == "single_contact") {
    p.t_end = 0.5;
    p.default_flux = {FluxKind::Roe, 0.0};
    p.oracle = OracleKind::RiemannExact;
    const PrimitiveState l{2.0, 1.0, 1.0}, r{1.0, 1.0, 1.0};
    p.initial = [=](double x) { return x < 0.5 ? l : r; };
    p.exact = detail::riemann_oracle(l, r, p.gas.gamma, 0.5);
  } else if (name == "sod") {
    p.t_end = 0.2;
    p.default_flux = {FluxKind::Roe, 0.0};
    p.oracle = OracleKind::RiemannExact;
    const PrimitiveState l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
    p.initial = [=](double x) { return x < 0.5 ? l : r; };
    p.exact = detail::riemann_oracle(l, r, p.gas.gamma, 0.5);
  } else if (name == "lax") {
    p.xmin = -10.0;
    p.xmax = 10.0;
    p.t_end = 1.3;
    p.default_flux = {FluxKind::Hllc, 0.1};
    p.oracle = OracleKind::RiemannExact;
    const PrimitiveState l{0.445, 0.698, 3.528}, r{0.5, 0.0, 0.571};
    p.initial = [=](double x) { return x < 0.0 ? l : r; };
    p.exact = detail::riemann_oracle(l, r, p.gas.gamma, 0.0);
  } else if (name == "shu_osher") {
    p.xmin = -5.0;
    p.xmax = 5.0;
    p.t_end = 1.8;
    p.default_cells = 200;
    p.default_flux = {FluxKind::Roe, 0.1};
    p.oracle = OracleKind::ReferenceOnly;
    p.initial = [](double x) {
      if (x < -4.0) return PrimitiveState{3.857143, 2.629369, 10.333333};
      return PrimitiveState{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
    };
  } else if (name == "titarev_toro") {
    p.xmin = -5.0;
    p.xmax = 5.0;
    p.t_end = 5.0;
    p.default_cells = 1000;
    p.default_flux = {FluxKind::Hllc, 0.1};
    p.oracle = OracleKind::ReferenceOnly;
    p.initial = [](double x) {
      if (x <= -4.5) return PrimitiveState{1.515695, 0.523346, 1.805};
      return PrimitiveState{1.0 + 0.1 * std::sin(20.0 * std::numbers::pi * x), 0.0, 1.0};
    };
  } else if (name == "p123") {
    p.t_end = 0.15;
    p.default_flux = {FluxKind::Hllc, 0.1};
    p.default_adapt.h_max = 0.05;
    p.oracle = OracleKind::RiemannExact;
    const PrimitiveState l{1.0, -2.0, 0.4}, r{1.0, 2.0, 0.4};
    p.initial = [=](double x) { return x < 0.5 ? l : r; };
    p.exact = detail::riemann_oracle(l, r, p.gas.gamma, 0.5);
  } else if (name == "blast") {
    p.t_end = 0.038;
    p.default_cells = 400;
    p.left_bc = p.right_bc = BoundaryKind::Reflective;
    p.default_flux = {FluxKind::Hllc, 0.1};
    p.default_limiter.positivity = true;
    p.default_adapt.h_min = 0.001;
    p.oracle = OracleKind::ReferenceOnly;
    p.initial = [](double x) {
      if (x < 0.1) return PrimitiveState{1.0, 0.0, 1000.0};
      if (x < 0.9) return PrimitiveState{1.0, 0.0, 0.01};
      return PrimitiveState{1.0, 0.0, 100.0};
    };
  } else if (name == "leblanc") {
    p.xmax = 9.0;
    p.gas.gamma = 5.0 / 3.0;
    p.t_end = 6.0;
    p.default_cells = 1400;
    p.default_flux = {FluxKind::Rusanov, 0.1};
    p.default_limiter.positivity = true;
    p.oracle = OracleKind::RiemannExact;
    const PrimitiveState l{1.0, 0.0, 0.1}, r{0.001, 0.0, 1e-7};
    p.initial = [=](double x) { return x < 3.0 ? l : r; };
    p.exact = detail::riemann_oracle(l, r, p.gas.gamma, 3.0);
  } else {
    throw ConfigError("catalog: unknown problem '" + name + "'");
  }
  return p;
}

/// Error norms of one primitive component against an exact solution sampled
/// at the final time. The cell-average norms are h-weighted; the polynomial
/// L2 variant integrates the in-cell polynomial error with a k+2 point rule.
struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double l2_poly = 0.0;
};

enum class Component { Density = 0, Velocity = 1, Pressure = 2 };

inline double primitive_component(const PrimitiveState& w, Component c) {
  switch (c) {
    case Component::Density: return w.rho;
    case Component::Velocity: return w.vel;
    default: return w.pre;
  }
}

inline ErrorNorms error_norms(const Mesh& mesh, const GasModel& gas,
                              const std::function<PrimitiveState(double)>& exact, Component comp,
                              int degree) {
  ErrorNorms norms;
  const QuadratureRule& rule = gauss_rule(std::min(degree + 2, 5));
  for (const Cell& cell : mesh.cells) {
    const double h = cell.width();
    double exact_avg = 0.0;
    double poly_sq = 0.0;
    for (int q = 0; q < rule.n; ++q) {
      const double x = cell.center() + 0.5 * rule.points[q] * h;
      const double ex = primitive_component(exact(x), comp);
      exact_avg += 0.5 * rule.weights[q] * ex;
      const double uh =
          primitive_component(to_primitive(cell.eval(rule.points[q], degree), gas), comp);
      poly_sq += 0.5 * rule.weights[q] * (uh - ex) * (uh - ex);
    }
    const double num_avg = primitive_component(to_primitive(cell.average(), gas), comp);
    const double diff = std::abs(num_avg - exact_avg);
    norms.l1 += h * diff;
    norms.l2 += h * diff * diff;
    norms.linf = std::max(norms.linf, diff);
    norms.l2_poly += h * poly_sq;
  }
  norms.l2 = std::sqrt(norms.l2);
  norms.l2_poly = std::sqrt(norms.l2_poly);
  return norms;
}

}  // namespace aledg
