#pragma once

#include <algorithm>
#include <vector>

#include "aledg/flux.hpp"
#include "aledg/mesh.hpp"
#include "aledg/motion.hpp"
#include "aledg/parallel.hpp"
#include "aledg/predictor.hpp"

namespace aledg {

/// Everything a single update step needs to know about the discretization:
/// polynomial degree, quadrature rules and the flux scheme. The k+1 point
/// spatial rule and the 1 (midpoint, k <= 1) or 2 point (k >= 2) time rule
/// integrate the geometric terms of constant states exactly.
struct StepContext {
  int degree = 1;
  GasModel gas;
  FluxScheme flux;
  int n_tau = 1;
  std::array<double, 2> theta{0.5, 0.0};  // normalized time offsets
  std::array<double, 2> wtau{1.0, 0.0};   // time weights, sum to 1
  const QuadratureRule* space = nullptr;
  const NodalModalMap* map = nullptr;
};

inline StepContext make_step_context(int degree, const GasModel& gas, const FluxScheme& flux) {
  if (degree < 0 || degree > kMaxDegree)
    throw ConfigError("make_step_context: unsupported degree");
  StepContext ctx;
  ctx.degree = degree;
  ctx.gas = gas;
  ctx.flux = flux;
  if (degree <= 1) {
    ctx.n_tau = 1;
    ctx.theta = {0.5, 0.0};
    ctx.wtau = {1.0, 0.0};
  } else {
    const double d = 0.5 / std::sqrt(3.0);
    ctx.n_tau = 2;
    ctx.theta = {0.5 - d, 0.5 + d};
    ctx.wtau = {0.5, 0.5};
  }
  ctx.space = &gauss_rule(degree + 1);
  ctx.map = &nodal_modal_map(degree);
  return ctx;
}

/// Cell-local predictors for the whole mesh; embarrassingly parallel.
inline std::vector<PredictorTrace> compute_predictors(const Mesh& mesh, const StepContext& ctx,
                                                      double dt) {
  const int n = mesh.size();
  std::vector<PredictorTrace> traces(n);
  std::span<const double> theta(ctx.theta.data(), static_cast<size_t>(ctx.n_tau));
  parallel_for(n, [&](int j) {
    traces[j] = predict(mesh.cells[j], ctx.gas, mesh.face_vel[j], mesh.face_vel[j + 1], dt,
                        ctx.degree, theta, *ctx.space, *ctx.map);
  });
  return traces;
}

namespace detail {

/// Predictor trace values meeting at one face at time offset index r, with
/// ghost states at the boundary.
inline void face_states(const Mesh& mesh, const std::vector<PredictorTrace>& traces, int face,
                        int r, ConservedState& ul, ConservedState& ur) {
  const int n = mesh.size();
  if (face > 0 && face < n) {
    ul = traces[face - 1].right[r];
    ur = traces[face].left[r];
    return;
  }
  if (mesh.periodic()) {
    ul = traces[n - 1].right[r];
    ur = traces[0].left[r];
    return;
  }
  if (face == 0) {
    ur = traces[0].left[r];
    ul = mesh.left_bc == BoundaryKind::Reflective ? mirror(ur) : ur;
  } else {
    ul = traces[n - 1].right[r];
    ur = mesh.right_bc == BoundaryKind::Reflective ? mirror(ul) : ul;
  }
}

}  // namespace detail

/// One fully discrete step: time-quadrature of the numerical face fluxes and
/// of the in-cell ALE flux against the basis derivative, then the modal
/// update on the advanced geometry,
///   h^{n+1} u_l^{n+1} = h^n u_l^n
///     + dt sum_r w_r [ sum_q wx_q g(u~, w) phi_l'(xi_q)
///                      + g^_{j-1/2} phi_l(-1) - g^_{j+1/2} phi_l(+1) ].
inline Mesh step(const Mesh& mesh, const std::vector<PredictorTrace>& traces,
                 const StepContext& ctx, double dt) {
  const int n = mesh.size();
  if (n == 0) throw EmptyMesh("step: empty mesh");
  const int k = ctx.degree;
  const QuadratureRule& space = *ctx.space;

  // Time-averaged numerical flux per face; each face is evaluated once and
  // its value shared by both neighbors, so conservation telescopes exactly.
  std::vector<FluxVector> face_flux(n + 1);
  parallel_for(n + 1, [&](int f) {
    FluxVector acc{};
    for (int r = 0; r < ctx.n_tau; ++r) {
      ConservedState ul, ur;
      detail::face_states(mesh, traces, f, r, ul, ur);
      acc += ctx.wtau[r] * numerical_flux(ctx.flux, ul, ur, mesh.face_vel[f], ctx.gas).flux;
    }
    face_flux[f] = acc;
  });
  if (mesh.periodic()) face_flux[n] = face_flux[0];

  Mesh next = mesh;
  advance_faces(next, dt);

  parallel_for(n, [&](int j) {
    const Cell& cell = mesh.cells[j];
    const double h_old = cell.width();
    const double h_new = next.cells[j].width();
    const double w_l = mesh.face_vel[j];
    const double w_r = mesh.face_vel[j + 1];

    std::array<ConservedState, 4> rhs{};
    for (int r = 0; r < ctx.n_tau; ++r) {
      for (int q = 0; q < space.n; ++q) {
        const double xi = space.points[q];
        const double wq = velocity_at_xi(w_l, w_r, xi);
        const FluxVector g = ale_flux(traces[j].volume[r][q], wq, ctx.gas);
        const double scale = ctx.wtau[r] * space.weights[q];
        for (int l = 1; l <= k; ++l) rhs[l] += (scale * eval_basis_deriv(l, xi)) * g;
      }
    }
    for (int l = 0; l <= k; ++l) {
      rhs[l] += basis_at_left(l) * face_flux[j] - basis_at_right(l) * face_flux[j + 1];
      next.cells[j].modes[l] = (h_old * cell.modes[l] + dt * rhs[l]) / h_new;
    }
  });
  return next;
}

}  // namespace aledg
