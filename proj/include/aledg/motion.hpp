#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "aledg/mesh.hpp"

namespace aledg {

enum class VelocityKind { Static, AverageTrace, LinearizedRiemann };

struct VelocityPolicy {
  VelocityKind kind = VelocityKind::AverageTrace;
  bool smoothing = true;
};

struct TimeStepParams {
  double cfl = 0.9;
  double beta = 0.1;  // max fractional cell-size change per step
};

/// Face velocity before smoothing. AverageTrace takes the mean of the two
/// trace velocities; LinearizedRiemann solves the acoustic Riemann problem
///   w = (rl cl vl + rr cr vr + pl - pr) / (rl cl + rr cr).
inline double raw_face_velocity(const PrimitiveState& lt, const PrimitiveState& rt,
                                const VelocityPolicy& policy, const GasModel& gas) {
  switch (policy.kind) {
    case VelocityKind::Static:
      return 0.0;
    case VelocityKind::AverageTrace:
      return 0.5 * (lt.vel + rt.vel);
    case VelocityKind::LinearizedRiemann: {
      const double zl = lt.rho * sound_speed(lt, gas);
      const double zr = rt.rho * sound_speed(rt, gas);
      return (zl * lt.vel + zr * rt.vel + lt.pre - rt.pre) / (zl + zr);
    }
  }
  return 0.0;
}

/// Three-face moving average w_f = (raw_{f-1} + raw_f + raw_{f+1}) / 3.
/// Periodic meshes wrap. Otherwise boundary faces keep their raw value and a
/// wall-mandated face is dropped from its neighbor's stencil.
inline std::vector<double> smooth_velocities(const std::vector<double>& raw,
                                             BoundaryKind left_bc, BoundaryKind right_bc) {
  const int nf = static_cast<int>(raw.size());
  std::vector<double> out(raw);
  if (nf < 3) return out;
  if (left_bc == BoundaryKind::Periodic) {
    // raw[0] and raw[nf-1] are the same face; the wrap neighbors are the
    // second and second-to-last entries.
    for (int f = 0; f < nf; ++f) {
      const double wm = f == 0 ? raw[nf - 2] : raw[f - 1];
      const double wp = f == nf - 1 ? raw[1] : raw[f + 1];
      out[f] = (wm + raw[f] + wp) / 3.0;
    }
    return out;
  }
  for (int f = 1; f < nf - 1; ++f) {
    double sum = raw[f];
    int count = 1;
    if (f - 1 > 0 || left_bc != BoundaryKind::Reflective) {
      sum += raw[f - 1];
      ++count;
    }
    if (f + 1 < nf - 1 || right_bc != BoundaryKind::Reflective) {
      sum += raw[f + 1];
      ++count;
    }
    out[f] = sum / count;
  }
  return out;
}

/// Linear interpolation of the face velocities at reference coordinate xi.
inline double velocity_at_xi(double w_left, double w_right, double xi) {
  return 0.5 * (1.0 - xi) * w_left + 0.5 * (1.0 + xi) * w_right;
}

/// Mesh velocity inside a cell at physical position x and time offset t from
/// the start of the step. Faces move linearly, so the interpolation weights
/// use the geometry at time t.
inline double in_cell_velocity(const Cell& cell, double w_left, double w_right, double x,
                               double t = 0.0) {
  const double xl = cell.x_left + t * w_left;
  const double xr = cell.x_right + t * w_right;
  const double h = xr - xl;
  if (x < xl - 1e-12 * h || x > xr + 1e-12 * h)
    throw Error("in_cell_velocity: position outside cell");
  return ((xr - x) * w_left + (x - xl) * w_right) / h;
}

namespace detail {

/// Left/right primitive traces of the DG solution at every face, with ghost
/// states applied at the boundaries.
inline void face_traces(const Mesh& mesh, const GasModel& gas, int degree,
                        std::vector<PrimitiveState>& left, std::vector<PrimitiveState>& right) {
  const int n = mesh.size();
  left.resize(n + 1);
  right.resize(n + 1);
  for (int j = 0; j < n; ++j) {
    right[j] = to_primitive(mesh.cells[j].eval(-1.0, degree), gas);
    left[j + 1] = to_primitive(mesh.cells[j].eval(+1.0, degree), gas);
  }
  if (mesh.periodic()) {
    left[0] = left[n];
    right[n] = right[0];
  } else {
    left[0] = mesh.left_bc == BoundaryKind::Reflective
                  ? PrimitiveState{right[0].rho, -right[0].vel, right[0].pre}
                  : right[0];
    right[n] = mesh.right_bc == BoundaryKind::Reflective
                   ? PrimitiveState{left[n].rho, -left[n].vel, left[n].pre}
                   : left[n];
  }
}

}  // namespace detail

/// Face velocities for the next step: policy value at every face, optional
/// smoothing, walls forced to zero.
inline std::vector<double> compute_face_velocities(const Mesh& mesh, const GasModel& gas,
                                                   const VelocityPolicy& policy, int degree) {
  const int n = mesh.size();
  if (n == 0) throw EmptyMesh("compute_face_velocities: empty mesh");
  if (policy.kind == VelocityKind::Static) return std::vector<double>(n + 1, 0.0);

  std::vector<PrimitiveState> lt, rt;
  detail::face_traces(mesh, gas, degree, lt, rt);
  std::vector<double> raw(n + 1);
  for (int f = 0; f <= n; ++f) raw[f] = raw_face_velocity(lt[f], rt[f], policy, gas);
  if (!mesh.periodic()) {
    if (mesh.left_bc == BoundaryKind::Reflective) raw[0] = 0.0;
    if (mesh.right_bc == BoundaryKind::Reflective) raw[n] = 0.0;
  }

  std::vector<double> w = policy.smoothing
                              ? smooth_velocities(raw, mesh.left_bc, mesh.right_bc)
                              : raw;
  if (mesh.periodic()) w[n] = w[0];
  if (!mesh.periodic()) {
    if (mesh.left_bc == BoundaryKind::Reflective) w[0] = 0.0;
    if (mesh.right_bc == BoundaryKind::Reflective) w[n] = 0.0;
  }
  return w;
}

/// Largest Rusanov signal speed per face, max(|vl - w| + cl, |vr - w| + cr),
/// evaluated on the current face velocities. These drive the time step for
/// every flux scheme.
inline std::vector<double> face_wave_speeds(const Mesh& mesh, const GasModel& gas, int degree) {
  const int n = mesh.size();
  std::vector<PrimitiveState> lt, rt;
  detail::face_traces(mesh, gas, degree, lt, rt);
  std::vector<double> speeds(n + 1);
  for (int f = 0; f <= n; ++f) {
    const double w = mesh.face_vel[f];
    speeds[f] = std::max(std::abs(lt[f].vel - w) + sound_speed(lt[f], gas),
                         std::abs(rt[f].vel - w) + sound_speed(rt[f], gas));
  }
  return speeds;
}

/// Positivity time-step bound scaled by cfl / (2k+1):
///   dt1 = min_j { (1 - beta/2) h_j / mean(lam_{j-1/2}, lam_{j+1/2}),
///                 beta h_j / |w_{j+1/2} - w_{j-1/2}| }.
inline double compute_dt(const Mesh& mesh, const GasModel& /*gas*/, const TimeStepParams& params,
                         int degree, const std::vector<double>& face_speeds) {
  const int n = mesh.size();
  if (n == 0) throw EmptyMesh("compute_dt: empty mesh");
  double dt1 = std::numeric_limits<double>::max();
  for (int j = 0; j < n; ++j) {
    const double h = mesh.cells[j].width();
    const double lam = 0.5 * (face_speeds[j] + face_speeds[j + 1]);
    dt1 = std::min(dt1, (1.0 - 0.5 * params.beta) * h / lam);
    const double dw = std::abs(mesh.face_vel[j + 1] - mesh.face_vel[j]);
    if (dw > 0.0) dt1 = std::min(dt1, params.beta * h / dw);
  }
  return params.cfl / (2.0 * degree + 1.0) * dt1;
}

/// Move every face by w dt. Throws InvertedCell if any width becomes
/// non-positive, which a compute_dt-compliant dt cannot produce.
inline void advance_faces(Mesh& mesh, double dt) {
  const int n = mesh.size();
  for (int j = 0; j < n; ++j) {
    Cell& c = mesh.cells[j];
    c.x_left += dt * mesh.face_vel[j];
    c.x_right += dt * mesh.face_vel[j + 1];
    if (!(c.width() > 0.0)) throw InvertedCell("advance_faces: cell inverted");
  }
}

}  // namespace aledg
