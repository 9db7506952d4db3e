#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arz/glimm.hpp"
#include "arz/grid.hpp"
#include "arz/imex.hpp"
#include "arz/pressure.hpp"
#include "arz/scenarios.hpp"

namespace arz {

enum class Scheme { Glimm, Imex };

inline const char* to_string(Scheme s) { return s == Scheme::Glimm ? "glimm" : "imex"; }

Scheme parse_scheme(const std::string& s);
OffsetKind parse_offset_kind(const std::string& s);

struct RunConfig {
  std::string scenario = "transport";
  Scheme scheme = Scheme::Glimm;
  OffsetKind law = OffsetKind::VO1;
  std::optional<double> epsilon;
  std::optional<double> gamma;
  double rho_star = 1;
  double v_ref = 1;
  /// Explicit truncation density; derived from the law when unset.
  std::optional<double> rho_num;
  double rho_num_prefactor = 0.2;
  double vo3_alpha = 0.5;
  /// VO3 rho_num = rho_star (1 - delta); defaults to the scenario's value.
  std::optional<double> vo3_delta;
  double dx = 1e-3;
  double cfl = 0.5;
  double dt_min = 1e-12;
  Handoff handoff = Handoff::Conserved;
  std::optional<double> t_final;
  std::vector<double> snapshots;

  void validate() const;
};

struct ResolvedLaw {
  PressureLawd law;
  /// Set for the IMEX scheme.
  std::optional<double> rho_num;
};

ResolvedLaw resolve_law(const RunConfig& cfg, const Scenario& sc);

struct StepRecord {
  std::uint64_t step = 0;
  double t = 0;
  double dt = 0;
  bool truncated = false;
};

struct RunLog {
  std::vector<StepRecord> steps;
  /// Smallest dt over steps that were not shortened to hit an output time.
  double min_dt = 0;
  double wall_seconds = 0;
  double initial_mass = 0;
  double final_mass = 0;
  /// Largest interior density seen at the end of any step.
  double max_density = 0;
};

struct RunResult {
  /// One per output time, in increasing order; the last is t_final.
  std::vector<SolutionField> snapshots;
  std::vector<double> snapshot_times;
  RunLog log;
  ResolvedLaw law;
};

struct RunHooks {
  /// Explicit (random-choice) stage of every step, for either scheme.
  StageObserver explicit_stage;
  std::function<void(const SolutionField&)> after_step;
};

/// Advances the configured scheme from 0 to t_final. Deterministic; every
/// output time is hit exactly.
RunResult run(const RunConfig& cfg, const RunHooks& hooks = {});

}  // namespace arz
