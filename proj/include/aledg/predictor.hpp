#pragma once

#include <array>
#include <span>

#include "aledg/basis.hpp"
#include "aledg/mesh.hpp"
#include "aledg/motion.hpp"

namespace aledg {

enum class PredictorKind { Constant, Taylor1, Cerk2, Cerk3 };

inline PredictorKind predictor_for_degree(int degree) {
  switch (degree) {
    case 0: return PredictorKind::Constant;
    case 1: return PredictorKind::Taylor1;
    case 2: return PredictorKind::Cerk2;
    default: return PredictorKind::Cerk3;
  }
}

/// Continuous-extension Runge-Kutta tableau. The solution over one step is
///   u(t_n + theta dt) = u^n + dt sum_s b_s(theta) k_s,  theta in [0, 1],
/// with b_s(0) = 0 and sum_s b_s(1) = 1.
struct CerkTableau {
  int stages = 0;
  std::array<double, 4> theta{};                 // stage abscissae
  std::array<std::array<double, 4>, 4> a{};      // stage coupling
  std::array<std::array<double, 3>, 4> b{};      // b_s = c0 th + c1 th^2 + c2 th^3

  double weight(int s, double th) const {
    return th * (b[s][0] + th * (b[s][1] + th * b[s][2]));
  }
};

inline const CerkTableau& cerk_tableau(PredictorKind kind) {
  static const CerkTableau cerk2 = [] {
    CerkTableau t;
    t.stages = 2;
    t.theta = {0.0, 1.0};
    t.a[1][0] = 1.0;
    t.b[0] = {1.0, -0.5, 0.0};
    t.b[1] = {0.0, 0.5, 0.0};
    return t;
  }();
  static const CerkTableau cerk3 = [] {
    CerkTableau t;
    t.stages = 4;
    t.theta = {0.0, 12.0 / 23.0, 4.0 / 5.0, 1.0};
    t.a[1][0] = 12.0 / 23.0;
    t.a[2][0] = -68.0 / 375.0;
    t.a[2][1] = 368.0 / 375.0;
    t.a[3][0] = 31.0 / 144.0;
    t.a[3][1] = 529.0 / 1152.0;
    t.a[3][2] = 125.0 / 384.0;
    t.b[0] = {1.0, -65.0 / 48.0, 41.0 / 72.0};
    t.b[1] = {0.0, 529.0 / 384.0, -529.0 / 576.0};
    t.b[2] = {0.0, 125.0 / 128.0, -125.0 / 192.0};
    t.b[3] = {0.0, -1.0, 1.0};
    return t;
  }();
  if (kind == PredictorKind::Cerk2) return cerk2;
  if (kind == PredictorKind::Cerk3) return cerk3;
  throw Error("cerk_tableau: not a CERK predictor");
}

/// Predicted in-cell solution at the space/time quadrature points and at both
/// faces, for each time quadrature offset.
struct PredictorTrace {
  int n_tau = 1;
  int n_q = 1;
  std::array<std::array<ConservedState, 4>, 2> volume{};  // [tau][q]
  std::array<ConservedState, 2> left{};                   // [tau]
  std::array<ConservedState, 2> right{};                  // [tau]
};

/// Trace of the t_n polynomial held fixed in time. Used for degree 0 and as
/// the fallback when a predictor stage leaves the physical state space.
inline PredictorTrace frozen_predict(const Cell& cell, int degree,
                                     std::span<const double> theta,
                                     const QuadratureRule& space) {
  PredictorTrace tr;
  tr.n_tau = static_cast<int>(theta.size());
  tr.n_q = space.n;
  for (int r = 0; r < tr.n_tau; ++r) {
    for (int q = 0; q < space.n; ++q) tr.volume[r][q] = cell.eval(space.points[q], degree);
    tr.left[r] = cell.eval(-1.0, degree);
    tr.right[r] = cell.eval(+1.0, degree);
  }
  return tr;
}

/// Linear space-time Taylor predictor for degree 1. The time derivative is
/// replaced through the quasi-linear form of the conservation law:
///   u(x, t_n + tau) = u^n(x) - tau [A(u_center) - w(x) I] du/dx.
inline PredictorTrace taylor_predict(const Cell& cell, const GasModel& gas, double w_left,
                                     double w_right, double dt, std::span<const double> theta,
                                     const QuadratureRule& space) {
  const int degree = 1;
  const double h = cell.width();
  const ConservedState du_dx = (2.0 / h) * cell.eval_deriv_xi(0.0, degree);
  const Mat3 jac = flux_jacobian(cell.average(), gas);
  const ConservedState a_du = jac.apply(du_dx);

  PredictorTrace tr;
  tr.n_tau = static_cast<int>(theta.size());
  tr.n_q = space.n;
  auto value = [&](double xi, double tau) {
    const double wq = velocity_at_xi(w_left, w_right, xi);
    return cell.eval(xi, degree) - tau * (a_du - wq * du_dx);
  };
  for (int r = 0; r < tr.n_tau; ++r) {
    const double tau = theta[r] * dt;
    for (int q = 0; q < space.n; ++q) tr.volume[r][q] = value(space.points[q], tau);
    tr.left[r] = value(-1.0, tau);
    tr.right[r] = value(+1.0, tau);
  }
  return tr;
}

/// CERK predictor for degrees 2 and 3. The nodal values at the k+1 Gauss
/// points evolve along the mesh motion by
///   du_m/dt = -[A(u_m) - w_m I] du/dx(x_m, t),
/// where the derivative comes from the modal form of the current nodal
/// values. Node reference positions are fixed, only the cell width h(t)
/// changes while the faces move linearly.
inline PredictorTrace cerk_predict(const Cell& cell, const GasModel& gas, double w_left,
                                   double w_right, double dt, PredictorKind kind,
                                   std::span<const double> theta, const QuadratureRule& space,
                                   const NodalModalMap& map) {
  const int degree = map.degree;
  const CerkTableau& tab = cerk_tableau(kind);
  const double h0 = cell.width();
  const double dh = w_right - w_left;

  std::array<ConservedState, 4> base{};
  for (int m = 0; m <= degree; ++m) base[m] = cell.eval(map.nodes[m], degree);

  // Nodal right-hand side at stage time offset tau.
  auto rhs = [&](const std::array<ConservedState, 4>& nodal, double tau) {
    const double h = h0 + tau * dh;
    const std::array<ConservedState, 4> modal = nodal_to_modal(nodal, degree);
    std::array<ConservedState, 4> out{};
    for (int m = 0; m <= degree; ++m) {
      ConservedState du_dxi{};
      for (int l = 1; l <= degree; ++l)
        du_dxi += eval_basis_deriv(l, map.nodes[m]) * modal[l];
      const ConservedState du_dx = (2.0 / h) * du_dxi;
      const double wm = velocity_at_xi(w_left, w_right, map.nodes[m]);
      out[m] = wm * du_dx - flux_jacobian(nodal[m], gas).apply(du_dx);
    }
    return out;
  };

  std::array<std::array<ConservedState, 4>, 4> k{};
  for (int s = 0; s < tab.stages; ++s) {
    std::array<ConservedState, 4> stage = base;
    for (int j = 0; j < s; ++j) {
      if (tab.a[s][j] == 0.0) continue;
      for (int m = 0; m <= degree; ++m) stage[m] += (dt * tab.a[s][j]) * k[j][m];
    }
    k[s] = rhs(stage, tab.theta[s] * dt);
  }

  PredictorTrace tr;
  tr.n_tau = static_cast<int>(theta.size());
  tr.n_q = space.n;
  for (int r = 0; r < tr.n_tau; ++r) {
    std::array<ConservedState, 4> nodal = base;
    for (int s = 0; s < tab.stages; ++s) {
      const double b = tab.weight(s, theta[r]);
      if (b == 0.0) continue;
      for (int m = 0; m <= degree; ++m) nodal[m] += (dt * b) * k[s][m];
    }
    // The nodes coincide with the spatial quadrature points.
    for (int q = 0; q <= degree; ++q) tr.volume[r][q] = nodal[q];
    const std::array<ConservedState, 4> modal = nodal_to_modal(nodal, degree);
    ConservedState lf{}, rf{};
    for (int m = 0; m <= degree; ++m) {
      lf += basis_at_left(m) * modal[m];
      rf += basis_at_right(m) * modal[m];
    }
    tr.left[r] = lf;
    tr.right[r] = rf;
  }
  return tr;
}

/// Predictor dispatch with the non-physical-stage fallback: if the expansion
/// leaves the physical state space the cell keeps its t_n polynomial for this
/// step and the positivity limiter deals with the update.
inline PredictorTrace predict(const Cell& cell, const GasModel& gas, double w_left,
                              double w_right, double dt, int degree,
                              std::span<const double> theta, const QuadratureRule& space,
                              const NodalModalMap& map) {
  const PredictorKind kind = predictor_for_degree(degree);
  try {
    switch (kind) {
      case PredictorKind::Constant:
        return frozen_predict(cell, degree, theta, space);
      case PredictorKind::Taylor1:
        return taylor_predict(cell, gas, w_left, w_right, dt, theta, space);
      default:
        return cerk_predict(cell, gas, w_left, w_right, dt, kind, theta, space, map);
    }
  } catch (const NonPhysicalState&) {
    return frozen_predict(cell, degree, theta, space);
  }
}

}  // namespace aledg
