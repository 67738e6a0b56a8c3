#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "aledg/mesh.hpp"
#include "aledg/parallel.hpp"

namespace aledg {

enum class LimiterMode { Off, TVD, TVB };

struct LimiterConfig {
  LimiterMode mode = LimiterMode::TVD;
  double tvb_m = 0.0;       // TVB constant M; 0 reduces TVB to TVD
  bool positivity = false;
  double pos_eps = 1e-13;   // floor for rho and p at the check points
};

inline double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

/// TVB variant: the first argument passes through unlimited below M h^2.
inline double minmod_b(double a, double b, double c, double m, double h) {
  if (std::abs(a) <= m * h * h) return a;
  return minmod(a, b, c);
}

/// Characteristic TVD/TVB slope limiter for non-uniform meshes. Writing the
/// in-cell solution as ubar + s (x - x_j)/(h/2) + ..., the slope s = sqrt(3)
/// u_1 of each local characteristic field is limited against the divided
/// differences of the neighbor averages; a limited cell is truncated to the
/// linear polynomial with the limited slope rotated back to conserved
/// variables. Cell averages never change.
inline void tvd_limit(Mesh& mesh, const GasModel& gas, const LimiterConfig& cfg, int degree) {
  if (cfg.mode == LimiterMode::Off || degree < 1) return;
  const int n = mesh.size();
  const double sqrt3 = std::sqrt(3.0);

  struct Update {
    bool limited = false;
    ConservedState slope{};
  };
  std::vector<Update> updates(n);

  parallel_for(n, [&](int j) {
    const Cell& cell = mesh.cells[j];
    const double h = cell.width();
    const EigenSystem eig = eigensystem(to_primitive(cell.average(), gas), gas);

    const ConservedState avg_c = eig.left.apply(cell.average());
    const ConservedState avg_prev = eig.left.apply(neighbor_average(mesh, j, -1));
    const ConservedState avg_next = eig.left.apply(neighbor_average(mesh, j, +1));
    const double h_prev = neighbor_width(mesh, j, -1);
    const double h_next = neighbor_width(mesh, j, +1);

    const ConservedState slope_c = eig.left.apply(sqrt3 * cell.modes[1]);

    ConservedState limited{};
    bool changed = false;
    for (int i = 0; i < 3; ++i) {
      const double a = slope_c[i] / h;
      const double b = (avg_c[i] - avg_prev[i]) / (0.5 * (h_prev + h));
      const double c = (avg_next[i] - avg_c[i]) / (0.5 * (h + h_next));
      const double s = h * (cfg.mode == LimiterMode::TVB ? minmod_b(a, b, c, cfg.tvb_m, h)
                                                         : minmod(a, b, c));
      limited[i] = s;
      const double scale = std::max(std::abs(slope_c[i]), std::abs(s));
      if (std::abs(s - slope_c[i]) > 1e-14 * scale) changed = true;
    }
    if (changed) updates[j] = {true, eig.right.apply(limited)};
  });

  for (int j = 0; j < n; ++j) {
    if (!updates[j].limited) continue;
    Cell& cell = mesh.cells[j];
    cell.modes[1] = updates[j].slope / sqrt3;
    for (int m = 2; m <= degree; ++m) cell.modes[m] = ConservedState{};
  }
}

namespace detail {

/// Check points for the scaling limiter: the k+1 spatial quadrature points
/// plus both cell ends, exactly where the scheme evaluates the polynomial.
inline int positivity_points(int degree, std::array<double, 7>& pts) {
  const QuadratureRule& rule = gauss_rule(degree + 1);
  int n = 0;
  pts[n++] = -1.0;
  for (int q = 0; q < rule.n; ++q) pts[n++] = rule.points[q];
  pts[n++] = 1.0;
  return n;
}

}  // namespace detail

/// Positivity-preserving scaling toward the cell average: first the density
/// polynomial is shrunk until rho >= eps at every check point, then all
/// components are shrunk jointly until the pressure is >= eps there too. The
/// cell average is untouched. Throws AverageNotPhysical when the average
/// itself is out of range, which no scaling can repair.
inline void positivity_limit(Mesh& mesh, const GasModel& gas, const LimiterConfig& cfg,
                             int degree) {
  if (!cfg.positivity || degree < 1) return;
  const double eps = cfg.pos_eps;
  std::array<double, 7> pts{};
  const int npts = detail::positivity_points(degree, pts);

  parallel_for(mesh.size(), [&](int j) {
    Cell& cell = mesh.cells[j];
    const ConservedState avg = cell.average();
    if (!(avg.rho > eps) || !(pressure_raw(avg, gas) > eps))
      throw AverageNotPhysical("positivity_limit: cell average not physical");

    double rho_min = avg.rho;
    for (int i = 0; i < npts; ++i)
      rho_min = std::min(rho_min, cell.eval(pts[i], degree).rho);
    if (rho_min < eps) {
      const double theta = (avg.rho - eps) / (avg.rho - rho_min);
      for (int m = 1; m <= degree; ++m) cell.modes[m].rho *= theta;
    }

    auto pressure_ok = [&](double theta) {
      for (int i = 0; i < npts; ++i) {
        const ConservedState u = avg + theta * (cell.eval(pts[i], degree) - avg);
        if (!(pressure_raw(u, gas) >= eps)) return false;
      }
      return true;
    };
    if (!pressure_ok(1.0)) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (pressure_ok(mid) ? lo : hi) = mid;
      }
      for (int m = 1; m <= degree; ++m) cell.modes[m] *= lo;
    }
  });
}

}  // namespace aledg
