#pragma once

#include <chrono>
#include <functional>
#include <limits>
#include <random>

#include "aledg/adapt.hpp"
#include "aledg/limiter.hpp"
#include "aledg/problems.hpp"
#include "aledg/update.hpp"

namespace aledg {

struct SolverConfig {
  int degree = 1;
  FluxScheme flux{FluxKind::Rusanov, 0.1};
  VelocityPolicy velocity{VelocityKind::AverageTrace, true};
  TimeStepParams time;
  LimiterConfig limiter;
  AdaptConfig adapt;
  int cells = 100;
  double boost = 0.0;       // uniform velocity added to the initial data
  double rand_alpha = 0.0;  // per-face mesh-velocity perturbation amplitude
  unsigned long long seed = 0;
  long max_steps = 5'000'000;
  double t_end = -1.0;  // < 0: use the problem's final time

  /// Drop a problem's own defaults into this config.
  void apply_problem_defaults(const ProblemSpec& p) {
    flux = p.default_flux;
    limiter = p.default_limiter;
    adapt.h_min = p.default_adapt.h_min;
    adapt.h_max = p.default_adapt.h_max;
    cells = p.default_cells;
  }
};

struct RunStats {
  long steps = 0;
  int final_cells = 0;
  double final_time = 0.0;
  double wall_seconds = 0.0;
  double min_rho = std::numeric_limits<double>::max();
  double min_pre = std::numeric_limits<double>::max();
  ConservedState initial_total{};
  ConservedState final_total{};
};

struct RunResult {
  Mesh mesh;
  RunStats stats;
};

/// Uniform mesh over the problem domain with the L2-projected initial data.
inline Mesh make_initial_mesh(const ProblemSpec& problem, int cells, int degree,
                              double boost = 0.0) {
  if (cells < 4) throw ConfigError("make_initial_mesh: need at least 4 cells");
  Mesh mesh;
  mesh.left_bc = problem.left_bc;
  mesh.right_bc = problem.right_bc;
  mesh.cells.resize(cells);
  mesh.face_vel.assign(cells + 1, 0.0);
  const double a = problem.xmin;
  const double length = problem.xmax - problem.xmin;
  for (int j = 0; j < cells; ++j) {
    Cell& cell = mesh.cells[j];
    cell.x_left = a + length * j / cells;
    cell.x_right = a + length * (j + 1) / cells;
    cell.modes = l2_project_state(
        [&](double xi) {
          PrimitiveState w = problem.initial(cell.center() + 0.5 * xi * cell.width());
          w.vel += boost;
          return to_conserved(w, problem.gas);
        },
        degree);
  }
  return mesh;
}

namespace detail {

/// Keep the fixed domain covered under transmissive boundary motion: once
/// the first face has moved inward by more than the initial spacing, a new
/// cell holding the inflow state is prepended (mirrored on the right).
inline void insert_boundary_cells(Mesh& mesh, const ProblemSpec& problem, double boost,
                                  double h0, int degree) {
  auto project = [&](double x_left, double x_right) {
    Cell cell{x_left, x_right, 0, {}};
    cell.modes = l2_project_state(
        [&](double xi) {
          PrimitiveState w = problem.initial(cell.center() + 0.5 * xi * cell.width());
          w.vel += boost;
          return to_conserved(w, problem.gas);
        },
        degree);
    return cell;
  };
  if (mesh.left_bc == BoundaryKind::Transmissive &&
      mesh.cells.front().x_left - problem.xmin > h0) {
    mesh.cells.insert(mesh.cells.begin(), project(problem.xmin, mesh.cells.front().x_left));
    mesh.face_vel.insert(mesh.face_vel.begin(), mesh.face_vel.front());
  }
  if (mesh.right_bc == BoundaryKind::Transmissive &&
      problem.xmax - mesh.cells.back().x_right > h0) {
    mesh.cells.push_back(project(mesh.cells.back().x_right, problem.xmax));
    mesh.face_vel.push_back(mesh.face_vel.back());
  }
}

}  // namespace detail

/// Advance a problem to its final time. One step runs: mesh velocity, time
/// step, predictor, update, TVD/TVB limiter, positivity limiter, adaptation.
/// The last step is clipped to land exactly on t_end.
inline RunResult run(const ProblemSpec& problem, const SolverConfig& cfg,
                     const std::function<void(const Mesh&, double, long)>& on_step = nullptr) {
  const auto wall_start = std::chrono::steady_clock::now();
  const GasModel gas = problem.gas;
  const double t_end = cfg.t_end >= 0.0 ? cfg.t_end : problem.t_end;
  const double h0 = (problem.xmax - problem.xmin) / cfg.cells;

  Mesh mesh = make_initial_mesh(problem, cfg.cells, cfg.degree, cfg.boost);
  StepContext ctx = make_step_context(cfg.degree, gas, cfg.flux);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  RunStats stats;
  stats.initial_total = total_conserved(mesh);

  double t = 0.0;
  const double t_eps = 1e-12 * std::max(1.0, std::abs(t_end));
  while (t_end - t > t_eps) {
    if (stats.steps >= cfg.max_steps) throw MaxStepsExceeded("run: step budget exhausted");

    mesh.face_vel = compute_face_velocities(mesh, gas, cfg.velocity, cfg.degree);
    if (cfg.rand_alpha > 0.0 && cfg.velocity.kind != VelocityKind::Static) {
      for (double& w : mesh.face_vel) w *= 1.0 + cfg.rand_alpha * unit(rng);
      if (mesh.periodic()) mesh.face_vel.back() = mesh.face_vel.front();
    }

    const std::vector<double> speeds = face_wave_speeds(mesh, gas, cfg.degree);
    double dt = compute_dt(mesh, gas, cfg.time, cfg.degree, speeds);
    dt = std::min(dt, t_end - t);

    const std::vector<PredictorTrace> traces = compute_predictors(mesh, ctx, dt);
    mesh = step(mesh, traces, ctx, dt);
    tvd_limit(mesh, gas, cfg.limiter, cfg.degree);
    positivity_limit(mesh, gas, cfg.limiter, cfg.degree);
    adapt(mesh, cfg.adapt, cfg.degree);
    if (!mesh.periodic())
      detail::insert_boundary_cells(mesh, problem, cfg.boost, h0, cfg.degree);

    t += dt;
    ++stats.steps;
    for (const Cell& cell : mesh.cells) {
      const PrimitiveState w = to_primitive(cell.average(), gas);
      stats.min_rho = std::min(stats.min_rho, w.rho);
      stats.min_pre = std::min(stats.min_pre, w.pre);
    }
    if (on_step) on_step(mesh, t, stats.steps);
  }

  stats.final_cells = mesh.size();
  stats.final_time = t;
  stats.final_total = total_conserved(mesh);
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return {std::move(mesh), stats};
}

}  // namespace aledg
