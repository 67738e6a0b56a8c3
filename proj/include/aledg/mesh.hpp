#pragma once

#include <vector>

#include "aledg/basis.hpp"
#include "aledg/euler.hpp"

namespace aledg {

enum class BoundaryKind { Transmissive, Reflective, Periodic };

/// One moving cell: face positions, refinement level and the modal Legendre
/// coefficients of the conserved state.
struct Cell {
  double x_left = 0.0;
  double x_right = 0.0;
  int level = 0;
  std::array<ConservedState, 4> modes{};

  double width() const { return x_right - x_left; }
  double center() const { return 0.5 * (x_left + x_right); }

  /// Cell average; identical to the first modal coefficient.
  const ConservedState& average() const { return modes[0]; }

  /// Polynomial value at reference coordinate xi in [-1, 1].
  ConservedState eval(double xi, int degree) const {
    ConservedState u = modes[0];
    for (int m = 1; m <= degree; ++m) u += eval_basis(m, xi) * modes[m];
    return u;
  }

  /// d/dxi of the polynomial at xi; multiply by 2/h for the x-derivative.
  ConservedState eval_deriv_xi(double xi, int degree) const {
    ConservedState u{};
    for (int m = 1; m <= degree; ++m) u += eval_basis_deriv(m, xi) * modes[m];
    return u;
  }
};

/// Ordered cell list plus the shared per-face velocities. face_vel has
/// size() + 1 entries; on periodic domains the first and last entry describe
/// the same physical face and are kept equal.
struct Mesh {
  std::vector<Cell> cells;
  std::vector<double> face_vel;
  BoundaryKind left_bc = BoundaryKind::Transmissive;
  BoundaryKind right_bc = BoundaryKind::Transmissive;

  int size() const { return static_cast<int>(cells.size()); }
  bool periodic() const { return left_bc == BoundaryKind::Periodic; }
  double domain_length() const { return cells.back().x_right - cells.front().x_left; }
};

/// Reflected ghost state for a wall at rest.
inline ConservedState mirror(const ConservedState& u) { return {u.rho, -u.mom, u.ener}; }

/// Average of the neighbor in direction dir (-1 left, +1 right) with the
/// boundary condition applied at the ends.
inline ConservedState neighbor_average(const Mesh& mesh, int j, int dir) {
  const int n = mesh.size();
  const int i = j + dir;
  if (i >= 0 && i < n) return mesh.cells[i].average();
  if (mesh.periodic()) return mesh.cells[(i + n) % n].average();
  const BoundaryKind bc = dir < 0 ? mesh.left_bc : mesh.right_bc;
  if (bc == BoundaryKind::Reflective) return mirror(mesh.cells[j].average());
  return mesh.cells[j].average();
}

inline double neighbor_width(const Mesh& mesh, int j, int dir) {
  const int n = mesh.size();
  const int i = j + dir;
  if (i >= 0 && i < n) return mesh.cells[i].width();
  if (mesh.periodic()) return mesh.cells[(i + n) % n].width();
  return mesh.cells[j].width();
}

/// Total conserved quantities, sum of h_j times the cell averages.
inline ConservedState total_conserved(const Mesh& mesh) {
  ConservedState total{};
  for (const Cell& c : mesh.cells) total += c.width() * c.average();
  return total;
}

}  // namespace aledg
