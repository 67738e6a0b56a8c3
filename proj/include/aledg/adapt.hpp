#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "aledg/mesh.hpp"

namespace aledg {

struct AdaptConfig {
  bool enabled = false;
  double h_min = 1e-6;
  double h_max = 1e9;
};

enum class Mark : unsigned char { None, Coarsen, Refine };

namespace detail {

inline int wrap_index(int i, int n) { return (i % n + n) % n; }

template <class Get>
inline bool any_neighbor(const Mesh& mesh, int j, Get&& pred) {
  const int n = mesh.size();
  for (int dir : {-1, +1}) {
    const int i = j + dir;
    if (i >= 0 && i < n) {
      if (pred(i)) return true;
    } else if (mesh.periodic()) {
      if (pred(wrap_index(i, n))) return true;
    }
  }
  return false;
}

template <class Get>
inline bool both_neighbors(const Mesh& mesh, int j, Get&& pred) {
  const int n = mesh.size();
  for (int dir : {-1, +1}) {
    const int i = j + dir;
    if (i >= 0 && i < n) {
      if (!pred(i)) return false;
    } else if (mesh.periodic()) {
      if (!pred(wrap_index(i, n))) return false;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Three marking sweeps. Sweep 1 flags cells outside the size bounds and
/// cells lagging a neighbor's refinement level. Sweep 2 fills refinement
/// gaps and flags cells more than twice the size of a neighbor (the 2 h_min
/// guard stops refine/coarsen ping-pong). Sweep 3 fills gaps once more, then
/// demotes any Refine next to a Coarsen so the pass stays consistent.
inline std::vector<Mark> mark_cells(const Mesh& mesh, const AdaptConfig& cfg) {
  const int n = mesh.size();
  std::vector<Mark> marks(n, Mark::None);

  for (int j = 0; j < n; ++j) {
    const Cell& c = mesh.cells[j];
    const double h = c.width();
    if (h < cfg.h_min) {
      marks[j] = Mark::Coarsen;
    } else if (h > cfg.h_max ||
               detail::any_neighbor(mesh, j, [&](int i) { return c.level < mesh.cells[i].level; })) {
      marks[j] = Mark::Refine;
    }
  }

  std::vector<Mark> pass2 = marks;
  for (int j = 0; j < n; ++j) {
    if (marks[j] != Mark::None) continue;
    const double h = mesh.cells[j].width();
    if (detail::both_neighbors(mesh, j, [&](int i) { return marks[i] == Mark::Refine; })) {
      pass2[j] = Mark::Refine;
    } else if (h > 2.0 * cfg.h_min &&
               detail::any_neighbor(mesh, j,
                                    [&](int i) { return h > 2.0 * mesh.cells[i].width(); })) {
      pass2[j] = Mark::Refine;
    }
  }

  std::vector<Mark> pass3 = pass2;
  for (int j = 0; j < n; ++j) {
    if (pass2[j] == Mark::None &&
        detail::both_neighbors(mesh, j, [&](int i) { return pass2[i] == Mark::Refine; }))
      pass3[j] = Mark::Refine;
  }
  std::vector<Mark> final = pass3;
  for (int j = 0; j < n; ++j) {
    if (pass3[j] == Mark::Refine &&
        detail::any_neighbor(mesh, j, [&](int i) { return pass3[i] == Mark::Coarsen; }))
      final[j] = Mark::None;
  }
  return final;
}

/// Split at the midpoint; the children carry the exact L2 projection of the
/// parent polynomial onto each half, so mass, momentum and energy are
/// conserved and polynomial data is reproduced exactly.
inline std::pair<Cell, Cell> refine_cell(const Cell& parent, int degree) {
  const double mid = 0.5 * (parent.x_left + parent.x_right);
  Cell left{parent.x_left, mid, parent.level + 1, {}};
  Cell right{mid, parent.x_right, parent.level + 1, {}};
  left.modes = l2_project_state(
      [&](double eta) { return parent.eval(0.5 * (eta - 1.0), degree); }, degree);
  right.modes = l2_project_state(
      [&](double eta) { return parent.eval(0.5 * (eta + 1.0), degree); }, degree);
  return {left, right};
}

/// Merge two adjacent cells; the union carries the L2 projection of the
/// piecewise polynomial, integrated per subinterval so polynomial halves
/// recombine exactly.
inline Cell merge_cells(const Cell& a, const Cell& b, int degree) {
  if (std::abs(a.x_right - b.x_left) > 1e-12 * (a.width() + b.width()))
    throw Error("merge_cells: cells not adjacent");
  Cell merged{a.x_left, b.x_right, std::min(a.level, b.level) - 1, {}};
  const double h = merged.width();
  const double xc = merged.center();
  const QuadratureRule& rule = gauss_rule(degree + 2);
  for (const Cell* part : {&a, &b}) {
    const double frac = part->width() / h;
    for (int q = 0; q < rule.n; ++q) {
      const double eta = rule.points[q];
      const double x = part->center() + 0.5 * eta * part->width();
      const double xi = (x - xc) / (0.5 * h);
      const ConservedState u = part->eval(eta, degree);
      for (int m = 0; m <= degree; ++m)
        merged.modes[m] += (0.5 * frac * rule.weights[q] * eval_basis(m, xi)) * u;
    }
  }
  return merged;
}

/// Mark, merge, refine. A Coarsen cell merges with its smaller neighbor
/// (ties to the left); each cell takes part in at most one merge or split
/// per call, leftover violations resolve on later steps. Face velocities of
/// new faces interpolate the parents'; they only seed diagnostics because
/// velocities are recomputed when the next step starts.
inline void adapt(Mesh& mesh, const AdaptConfig& cfg, int degree) {
  if (!cfg.enabled) return;
  const int n = mesh.size();
  if (n < 2) return;
  const std::vector<Mark> marks = mark_cells(mesh, cfg);

  // Resolve merge partners on the original indexing.
  std::vector<bool> used(n, false);
  std::vector<bool> merge_here(n, false);  // merge cells j and j+1
  for (int j = 0; j < n; ++j) {
    if (marks[j] != Mark::Coarsen || used[j]) continue;
    const bool left_ok = j > 0 && !used[j - 1];
    const bool right_ok = j + 1 < n && !used[j + 1];
    if (!left_ok && !right_ok) continue;
    int partner;
    if (left_ok && right_ok)
      partner = mesh.cells[j - 1].width() <= mesh.cells[j + 1].width() ? j - 1 : j + 1;
    else
      partner = left_ok ? j - 1 : j + 1;
    const int a = std::min(j, partner);
    used[a] = used[a + 1] = true;
    merge_here[a] = true;
  }

  std::vector<Cell> cells;
  std::vector<double> face_vel;
  cells.reserve(n + 8);
  face_vel.reserve(n + 9);
  face_vel.push_back(mesh.face_vel.front());
  for (int j = 0; j < n; ++j) {
    if (merge_here[j]) {
      cells.push_back(merge_cells(mesh.cells[j], mesh.cells[j + 1], degree));
      face_vel.push_back(mesh.face_vel[j + 2]);
      ++j;
    } else if (!used[j] && marks[j] == Mark::Refine) {
      auto [left, right] = refine_cell(mesh.cells[j], degree);
      cells.push_back(left);
      cells.push_back(right);
      face_vel.push_back(0.5 * (mesh.face_vel[j] + mesh.face_vel[j + 1]));
      face_vel.push_back(mesh.face_vel[j + 1]);
    } else {
      cells.push_back(mesh.cells[j]);
      face_vel.push_back(mesh.face_vel[j + 1]);
    }
  }
  mesh.cells = std::move(cells);
  mesh.face_vel = std::move(face_vel);
}

}  // namespace aledg
