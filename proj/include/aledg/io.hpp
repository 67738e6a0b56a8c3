#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aledg/mesh.hpp"

namespace aledg {

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void atomic_write(const std::filesystem::path& path, const std::string& body) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    out << body;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// Snapshot: `# t=<t> cells=<n> gamma=<g>` then one row per cell with
/// `x_center h rho v p` of the cell average; optionally the raw modal
/// coefficients appended.
inline std::string snapshot_text(const Mesh& mesh, const GasModel& gas, double t, int degree,
                                 bool with_modal = false) {
  std::ostringstream out;
  out << "# t=" << detail::fmt(t) << " cells=" << mesh.size()
      << " gamma=" << detail::fmt(gas.gamma) << "\n";
  for (const Cell& cell : mesh.cells) {
    const PrimitiveState w = to_primitive(cell.average(), gas);
    out << detail::fmt(cell.center()) << " " << detail::fmt(cell.width()) << " "
        << detail::fmt(w.rho) << " " << detail::fmt(w.vel) << " " << detail::fmt(w.pre);
    if (with_modal)
      for (int m = 0; m <= degree; ++m)
        for (int i = 0; i < 3; ++i) out << " " << detail::fmt(cell.modes[m][i]);
    out << "\n";
  }
  return out.str();
}

inline void write_snapshot(const std::filesystem::path& path, const Mesh& mesh,
                           const GasModel& gas, double t, int degree, bool with_modal = false) {
  detail::atomic_write(path, snapshot_text(mesh, gas, t, degree, with_modal));
}

/// Sampled reference profile, exchanged through plain-text cache files.
struct ReferenceSolution {
  std::string problem;
  int resolution = 0;
  std::vector<double> x, rho, vel, pre;

  PrimitiveState sample(double xq) const {
    if (x.empty()) throw Error("reference: empty table");
    if (xq <= x.front()) return {rho.front(), vel.front(), pre.front()};
    if (xq >= x.back()) return {rho.back(), vel.back(), pre.back()};
    const auto it = std::upper_bound(x.begin(), x.end(), xq);
    const size_t i = static_cast<size_t>(it - x.begin());
    const double s = (xq - x[i - 1]) / (x[i] - x[i - 1]);
    return {rho[i - 1] + s * (rho[i] - rho[i - 1]), vel[i - 1] + s * (vel[i] - vel[i - 1]),
            pre[i - 1] + s * (pre[i] - pre[i - 1])};
  }
};

inline void write_reference(const std::filesystem::path& path, const ReferenceSolution& ref) {
  std::ostringstream out;
  out << "# problem " << ref.problem << "\n";
  out << "# resolution " << ref.resolution << "\n";
  for (size_t i = 0; i < ref.x.size(); ++i)
    out << detail::fmt(ref.x[i]) << " " << detail::fmt(ref.rho[i]) << " "
        << detail::fmt(ref.vel[i]) << " " << detail::fmt(ref.pre[i]) << "\n";
  detail::atomic_write(path, out.str());
}

inline ReferenceSolution read_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  ReferenceSolution ref;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      hs >> key;
      if (key == "problem") hs >> ref.problem;
      if (key == "resolution") hs >> ref.resolution;
      continue;
    }
    std::istringstream row(line);
    double x, r, v, p;
    if (row >> x >> r >> v >> p) {
      ref.x.push_back(x);
      ref.rho.push_back(r);
      ref.vel.push_back(v);
      ref.pre.push_back(p);
    }
  }
  return ref;
}

}  // namespace aledg
