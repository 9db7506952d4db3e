// Command-line driver: run a scenario, sweep a parameter ladder, compare two runs.

#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arz/driver.hpp"
#include "arz/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunFlags {
  std::string scenario = "transport";
  std::string scheme = "glimm";
  std::string law = "vo1";
  std::string handoff = "conserved";
  double epsilon = 0;
  double gamma = 0;
  double rho_num = 0;
  double t_final = 0;
  std::string out;
};

arz::Handoff parse_handoff(const std::string& s) {
  if (s == "conserved") return arz::Handoff::Conserved;
  if (s == "primitive") return arz::Handoff::Primitive;
  throw arz::ParameterError("unknown handoff '" + s + "' (expected conserved or primitive)");
}

void add_law_options(CLI::App* cmd, RunFlags& f, arz::RunConfig& cfg) {
  cmd->add_option("--scenario", f.scenario, "Scenario name")
      ->check(CLI::IsMember(arz::scenario_names()));
  cmd->add_option("--law", f.law, "Velocity offset")->check(CLI::IsMember({"vo1", "vo2", "vo3"}));
  cmd->add_option("--dx", cfg.dx, "Cell width")->check(CLI::PositiveNumber);
  cmd->add_option("--cfl", cfg.cfl, "CFL number")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--rho-star", cfg.rho_star, "Maximal density");
  cmd->add_option("--v-ref", cfg.v_ref, "VO3 reference velocity");
  cmd->add_option("--rho-num-prefactor", cfg.rho_num_prefactor,
                  "Prefactor of the default VO1/VO2 truncation density");
  cmd->add_option("--handoff", f.handoff, "IMEX handoff between stages")
      ->check(CLI::IsMember({"conserved", "primitive"}));
}

/// Copies the flags that were actually given into cfg.
void apply_flags(const CLI::App* cmd, const RunFlags& f, arz::RunConfig& cfg) {
  cfg.scenario = f.scenario;
  cfg.law = arz::parse_offset_kind(f.law);
  cfg.handoff = parse_handoff(f.handoff);
  if (cmd->get_option_no_throw("--scheme") != nullptr) cfg.scheme = arz::parse_scheme(f.scheme);
  if (auto* o = cmd->get_option_no_throw("--epsilon"); o && o->count() > 0) cfg.epsilon = f.epsilon;
  if (auto* o = cmd->get_option_no_throw("--gamma"); o && o->count() > 0) cfg.gamma = f.gamma;
  if (auto* o = cmd->get_option_no_throw("--rho-num"); o && o->count() > 0) cfg.rho_num = f.rho_num;
  if (auto* o = cmd->get_option_no_throw("--t-final"); o && o->count() > 0) cfg.t_final = f.t_final;
}

int cmd_run(const arz::RunConfig& cfg, const std::string& out) {
  const arz::RunResult result = arz::run(cfg);
  arz::write_run(out, cfg, result);
  const auto& log = result.log;
  std::printf("%s %s %s: %zu steps, min dt %.6g, mass %.6g -> %.6g, %.2fs\n",
              cfg.scenario.c_str(), arz::to_string(cfg.scheme), arz::to_string(cfg.law),
              log.steps.size(), log.min_dt, log.initial_mass, log.final_mass,
              log.wall_seconds);
  return 0;
}

struct SweepRow {
  double value;
  double glimm_dt;
  double imex_dt;
};

int cmd_sweep(arz::RunConfig base, const std::string& param, std::vector<double> values,
              const std::string& out) {
  if (values.empty()) {
    values = param == "epsilon" ? std::vector<double>{1e-4, 1e-5, 1e-6, 1e-7}
                                : std::vector<double>{50, 100, 200, 500};
  }
  std::vector<std::future<arz::RunResult>> jobs;
  std::vector<arz::RunConfig> configs;
  for (double value : values) {
    for (auto scheme : {arz::Scheme::Glimm, arz::Scheme::Imex}) {
      arz::RunConfig cfg = base;
      cfg.scheme = scheme;
      (param == "epsilon" ? cfg.epsilon : cfg.gamma) = value;
      configs.push_back(cfg);
    }
  }
  for (const auto& cfg : configs) {
    jobs.push_back(std::async(std::launch::async, [cfg] { return arz::run(cfg); }));
  }

  std::vector<SweepRow> rows;
  for (std::size_t k = 0; k < jobs.size(); k += 2) {
    const arz::RunResult glimm = jobs[k].get();
    const arz::RunResult imex = jobs[k + 1].get();
    const double value = values[k / 2];
    if (!out.empty()) {
      char tag[64];
      std::snprintf(tag, sizeof tag, "%s_%g", param.c_str(), value);
      arz::write_run(fs::path(out) / tag / "glimm", configs[k], glimm);
      arz::write_run(fs::path(out) / tag / "imex", configs[k + 1], imex);
    }
    rows.push_back({value, glimm.log.min_dt, imex.log.min_dt});
  }

  std::printf("%-10s %-14s %-14s %s\n", param.c_str(), "glimm_dt", "imex_dt", "factor");
  for (const auto& r : rows) {
    std::printf("%-10g %-14.4g %-14.4g %.3g\n", r.value, r.glimm_dt, r.imex_dt,
                r.imex_dt / r.glimm_dt);
  }
  return 0;
}

int cmd_compare(const std::string& glimm_dir, const std::string& imex_dir) {
  const double g = arz::read_summary_min_dt(fs::path(glimm_dir) / "summary.txt");
  const double i = arz::read_summary_min_dt(fs::path(imex_dir) / "summary.txt");
  std::printf("glimm min dt   %.6g\nimex min dt    %.6g\nfactor         %.4g\n", g, i, i / g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ARZ traffic flow solvers"};
  app.require_subcommand(1);
  // Parsed at the top level; subcommand keys go under [run] / [sweep].
  app.set_config("--config", "", "Config file ([run] or [sweep] section of key=value lines)");
  app.fallthrough();

  arz::RunConfig run_cfg;
  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Run one scenario");
  add_law_options(run, run_flags, run_cfg);
  run->add_option("--scheme", run_flags.scheme, "Scheme")
      ->check(CLI::IsMember({"glimm", "imex"}));
  run->add_option("--epsilon", run_flags.epsilon, "VO1/VO2 epsilon")->check(CLI::PositiveNumber);
  run->add_option("--gamma", run_flags.gamma, "Exponent");
  run->add_option("--rho-num", run_flags.rho_num, "IMEX truncation density");
  run->add_option("--t-final", run_flags.t_final, "Final time")->check(CLI::NonNegativeNumber);
  run->add_option("--snapshot", run_cfg.snapshots, "Output times");
  run->add_option("--out", run_flags.out, "Output directory")->required();

  arz::RunConfig sweep_cfg;
  RunFlags sweep_flags;
  sweep_flags.scenario = "congestion";
  sweep_flags.law = "vo2";
  std::string param = "epsilon";
  std::vector<double> values;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Run both schemes along a parameter ladder");
  add_law_options(sweep, sweep_flags, sweep_cfg);
  sweep->add_option("--param", param, "Parameter to vary")
      ->check(CLI::IsMember({"epsilon", "gamma"}));
  sweep->add_option("--values", values, "Ladder values");
  sweep->add_option("--out", sweep_out, "Optional output directory");

  std::string glimm_dir, imex_dir;
  auto* compare = app.add_subcommand("compare", "Report the IMEX / Glimm min-dt factor");
  compare->add_option("--glimm", glimm_dir, "Glimm run directory")->required();
  compare->add_option("--imex", imex_dir, "IMEX run directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      apply_flags(run, run_flags, run_cfg);
      return cmd_run(run_cfg, run_flags.out);
    }
    if (*sweep) {
      // A gamma ladder means VO3 unless a law was named.
      if (param == "gamma" && sweep->get_option("--law")->count() == 0) sweep_flags.law = "vo3";
      apply_flags(sweep, sweep_flags, sweep_cfg);
      return cmd_sweep(sweep_cfg, param, values, sweep_out);
    }
    return cmd_compare(glimm_dir, imex_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
