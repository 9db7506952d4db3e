#include "arz/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace arz {

namespace fs = std::filesystem;

namespace {

// printf may write -nan.
std::string num(double x) { return std::isnan(x) ? "nan" : format_number(x); }

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

std::string snapshot_name(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snapshot_%g.csv", t);
  return buf;
}

void write_csv(const fs::path& path, const SolutionField& field, const PressureLawd& law) {
  auto out = open_out(path);
  out << "x,rho,v,y\n";
  const auto& grid = field.grid;
  for (Eigen::Index j = 0; j < grid.n_cells; ++j) {
    const auto i = j + Grid1D::ghost_width;
    // Raw y / rho - p, so a failing state is still written as computed.
    const double rho = field.rho[i];
    const double v = rho <= law.vacuum_density() || !law.in_domain(rho)
                         ? std::nan("")
                         : field.y[i] / rho - law.value(rho);
    out << num(grid.center(j)) << ',' << num(field.rho[i]) << ',' << num(v) << ','
        << num(field.y[i]) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

SolutionField read_csv(const fs::path& path, double time) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,rho", 0) != 0) {
    throw IoError("missing header in " + path.string());
  }
  std::vector<double> xs, rhos, ys;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    if (row.size() != 4) throw IoError("malformed row in " + path.string() + ": " + line);
    xs.push_back(row[0]);
    rhos.push_back(row[1]);
    ys.push_back(row[3]);
  }
  if (xs.size() < 2) throw IoError("too few rows in " + path.string());
  const double dx = xs[1] - xs[0];
  const auto n = static_cast<Eigen::Index>(xs.size());
  const Grid1D grid(xs.front() - dx / 2, xs.front() - dx / 2 + dx * n, n);
  SolutionField field(grid);
  for (Eigen::Index j = 0; j < n; ++j) {
    field.rho[j + 1] = rhos[j];
    field.y[j + 1] = ys[j];
  }
  field.set_state(0, field.state(1));
  field.set_state(n + 1, field.state(n));
  field.time = time;
  return field;
}

void write_log(const fs::path& path, const RunLog& log) {
  auto out = open_out(path);
  out << "step,t,dt\n";
  for (const auto& s : log.steps) out << s.step << ',' << num(s.t) << ',' << num(s.dt) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

void write_summary(const fs::path& path, const RunConfig& cfg, const RunResult& result) {
  auto out = open_out(path);
  const auto& law = result.law.law;
  out << "scenario=" << cfg.scenario << '\n'
      << "scheme=" << to_string(cfg.scheme) << '\n'
      << "law=" << to_string(law.kind()) << '\n'
      << "gamma=" << num(law.gamma()) << '\n';
  if (law.kind() != OffsetKind::VO3) out << "epsilon=" << num(law.epsilon()) << '\n';
  if (result.law.rho_num) {
    out << "rho_num=" << num(*result.law.rho_num) << '\n'
        << "handoff=" << to_string(cfg.handoff) << '\n';
  }
  const auto& log = result.log;
  out << "dx=" << num(cfg.dx) << '\n'
      << "cfl=" << num(cfg.cfl) << '\n'
      << "t_final=" << num(result.snapshot_times.back()) << '\n'
      << "steps=" << log.steps.size() << '\n'
      << "min_dt=" << num(log.min_dt) << '\n'
      << "initial_mass=" << num(log.initial_mass) << '\n'
      << "final_mass=" << num(log.final_mass) << '\n'
      << "max_density=" << num(log.max_density) << '\n'
      << "wall_seconds=" << num(log.wall_seconds) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

double read_summary_min_dt(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("min_dt=", 0) == 0) return std::strtod(line.c_str() + 7, nullptr);
  }
  throw IoError("no min_dt in " + path.string());
}

void emit_plot_script(const fs::path& path) {
  auto out = open_out(path);
  out << R"(import glob
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

here = os.path.dirname(os.path.abspath(__file__))
files = sorted(glob.glob(os.path.join(here, "snapshot_*.csv")),
               key=lambda f: float(os.path.basename(f)[9:-4]))
fig, (ax_rho, ax_v) = plt.subplots(2, 1, sharex=True, figsize=(7, 6))
for f in files:
    d = np.genfromtxt(f, delimiter=",", names=True)
    label = "t = " + os.path.basename(f)[9:-4]
    ax_rho.plot(d["x"], d["rho"], label=label)
    ax_v.plot(d["x"], d["v"], label=label)
ax_rho.set_ylabel("density")
ax_v.set_ylabel("velocity")
ax_v.set_xlabel("x")
ax_rho.legend()
fig.tight_layout()
fig.savefig(sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "profiles.png"))
)";
  if (!out) throw IoError("write failed: " + path.string());
}

void write_run(const fs::path& dir, const RunConfig& cfg, const RunResult& result) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
    write_csv(dir / snapshot_name(result.snapshot_times[k]), result.snapshots[k],
              result.law.law);
  }
  write_log(dir / "log.csv", result.log);
  write_summary(dir / "summary.txt", cfg, result);
  emit_plot_script(dir / "plot.py");
}

}  // namespace arz
