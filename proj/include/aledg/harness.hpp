#pragma once

#include <map>
#include <sstream>

#include "aledg/io.hpp"
#include "aledg/solver.hpp"

namespace aledg {

/// High-resolution fallback oracle for problems without a closed form:
/// a static-mesh degree-1 Rusanov run at >= 8x the target resolution, with
/// the problem's default limiter settings.
inline ReferenceSolution compute_reference(const ProblemSpec& problem, int resolution) {
  SolverConfig cfg;
  cfg.apply_problem_defaults(problem);
  cfg.degree = 1;
  cfg.cells = resolution;
  cfg.flux = {FluxKind::Rusanov, 0.1};
  cfg.velocity = {VelocityKind::Static, false};
  if (cfg.limiter.mode == LimiterMode::Off) cfg.limiter.mode = LimiterMode::TVD;
  const RunResult result = run(problem, cfg);

  ReferenceSolution ref;
  ref.problem = problem.name;
  ref.resolution = resolution;
  for (const Cell& cell : result.mesh.cells) {
    const PrimitiveState w = to_primitive(cell.average(), problem.gas);
    ref.x.push_back(cell.center());
    ref.rho.push_back(w.rho);
    ref.vel.push_back(w.vel);
    ref.pre.push_back(w.pre);
  }
  return ref;
}

inline ReferenceSolution load_or_compute_reference(const ProblemSpec& problem, int resolution,
                                                   const std::filesystem::path& cache_dir) {
  std::filesystem::create_directories(cache_dir);
  const std::filesystem::path path =
      cache_dir / (problem.name + "_ref_" + std::to_string(resolution) + ".txt");
  if (std::filesystem::exists(path)) {
    ReferenceSolution ref = read_reference(path);
    if (ref.problem == problem.name && ref.resolution == resolution) return ref;
  }
  ReferenceSolution ref = compute_reference(problem, resolution);
  write_reference(path, ref);
  return ref;
}

/// h-weighted L1 distance between the cell-average density and a sampled
/// profile.
inline double l1_density_vs(const Mesh& mesh, const GasModel& gas,
                            const ReferenceSolution& ref) {
  double err = 0.0;
  for (const Cell& cell : mesh.cells) {
    const PrimitiveState w = to_primitive(cell.average(), gas);
    err += cell.width() * std::abs(w.rho - ref.sample(cell.center()).rho);
  }
  return err;
}

inline double l1_density_vs_exact(const Mesh& mesh, const GasModel& gas,
                                  const std::function<PrimitiveState(double)>& exact,
                                  int degree) {
  return error_norms(mesh, gas, exact, Component::Density, degree).l1;
}

struct ConvergenceRow {
  int cells = 0;
  double error = 0.0;
  double rate = 0.0;  // defined from the second row on
};

struct ConvergenceReport {
  std::string problem;
  std::vector<int> degrees;
  std::map<int, std::vector<ConvergenceRow>> rows;

  std::string text() const {
    std::ostringstream out;
    out << "# problem " << problem << "\n";
    out << "# N";
    for (int k : degrees) out << "  err(k=" << k << ") rate";
    out << "\n";
    const size_t levels = rows.begin()->second.size();
    for (size_t i = 0; i < levels; ++i) {
      out << rows.begin()->second[i].cells;
      for (int k : degrees) {
        const ConvergenceRow& r = rows.at(k)[i];
        char buf[64];
        std::snprintf(buf, sizeof(buf), "  %.3e", r.error);
        out << buf;
        if (i > 0) {
          std::snprintf(buf, sizeof(buf), " %.3f", r.rate);
          out << buf;
        } else {
          out << " -";
        }
      }
      out << "\n";
    }
    return out.str();
  }
};

/// N-sweep per degree with L2 density errors of the cell averages; the rate
/// uses the initial spacing, rate_i = log2(err_{i-1} / err_i) for doubled N.
inline ConvergenceReport run_convergence(const ProblemSpec& problem, const SolverConfig& base,
                                         const std::vector<int>& degrees,
                                         const std::vector<int>& cell_counts) {
  if (!problem.exact) throw ConfigError("run_convergence: problem has no exact solution");
  ConvergenceReport report;
  report.problem = problem.name;
  report.degrees = degrees;
  const double t_end = base.t_end >= 0.0 ? base.t_end : problem.t_end;
  auto exact_at_end = [&](double x) { return problem.exact(x, t_end); };
  for (int k : degrees) {
    std::vector<ConvergenceRow>& rows = report.rows[k];
    for (int n : cell_counts) {
      SolverConfig cfg = base;
      cfg.degree = k;
      cfg.cells = n;
      const RunResult result = run(problem, cfg);
      const double err =
          error_norms(result.mesh, problem.gas, exact_at_end, Component::Density, k).l2;
      ConvergenceRow row{n, err, 0.0};
      if (!rows.empty())
        row.rate = std::log2(rows.back().error / err) /
                   std::log2(static_cast<double>(n) / rows.back().cells);
      rows.push_back(row);
    }
  }
  return report;
}

struct BoostRow {
  double v = 0.0;
  long steps_static = 0;
  long steps_moving = 0;
  double l1_shifted_dev = 0.0;  // moving-mesh density vs the V=0 moving run
};

struct BoostReport {
  std::string problem;
  std::vector<BoostRow> rows;

  std::string text() const {
    std::ostringstream out;
    out << "# problem " << problem << "\n# V steps_static steps_moving l1_dev_vs_v0\n";
    for (const BoostRow& r : rows) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%g %ld %ld %.3e\n", r.v, r.steps_static, r.steps_moving,
                    r.l1_shifted_dev);
      out << buf;
    }
    return out.str();
  }
};

/// Frame-independence study: each boost velocity V runs on a static and on a
/// moving mesh; the moving-mesh profile, shifted back by V t_end, is compared
/// against the V = 0 moving-mesh run cell by cell (boundary inflow prepends
/// cells, so the original cells are the trailing ones).
inline BoostReport run_boost_study(const ProblemSpec& problem, const std::vector<double>& boosts,
                                   const SolverConfig& base) {
  BoostReport report;
  report.problem = problem.name;
  const double t_end = base.t_end >= 0.0 ? base.t_end : problem.t_end;

  SolverConfig cfg0 = base;
  cfg0.boost = 0.0;
  cfg0.velocity.kind = VelocityKind::AverageTrace;
  const RunResult base_run = run(problem, cfg0);

  for (double v : boosts) {
    BoostRow row;
    row.v = v;

    SolverConfig cfg_static = base;
    cfg_static.boost = v;
    cfg_static.velocity = {VelocityKind::Static, false};
    row.steps_static = run(problem, cfg_static).stats.steps;

    SolverConfig cfg_moving = base;
    cfg_moving.boost = v;
    cfg_moving.velocity.kind = VelocityKind::AverageTrace;
    const RunResult moving = run(problem, cfg_moving);
    row.steps_moving = moving.stats.steps;

    const int n0 = base_run.mesh.size();
    const int nv = moving.mesh.size();
    if (nv < n0) throw Error("run_boost_study: boosted run lost cells");
    double dev = 0.0;
    for (int j = 0; j < n0; ++j) {
      const Cell& a = base_run.mesh.cells[j];
      const Cell& b = moving.mesh.cells[nv - n0 + j];
      const PrimitiveState wa = to_primitive(a.average(), problem.gas);
      const PrimitiveState wb = to_primitive(b.average(), problem.gas);
      dev += b.width() * std::abs(wb.rho - wa.rho);
    }
    row.l1_shifted_dev = dev;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace aledg
