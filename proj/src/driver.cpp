#include "arz/driver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

namespace arz {

Scheme parse_scheme(const std::string& s) {
  if (s == "glimm") return Scheme::Glimm;
  if (s == "imex") return Scheme::Imex;
  throw ParameterError("unknown scheme '" + s + "' (expected glimm or imex)");
}

OffsetKind parse_offset_kind(const std::string& s) {
  if (s == "vo1") return OffsetKind::VO1;
  if (s == "vo2") return OffsetKind::VO2;
  if (s == "vo3") return OffsetKind::VO3;
  throw ParameterError("unknown law '" + s + "' (expected vo1, vo2 or vo3)");
}

void RunConfig::validate() const {
  if (!(dx > 0)) throw ParameterError("dx must be positive");
  if (t_final && !(*t_final >= 0)) throw ParameterError("t_final must be non-negative");
  for (double t : snapshots) {
    if (!(t >= 0)) throw ParameterError("snapshot times must be non-negative");
  }
}

ResolvedLaw resolve_law(const RunConfig& cfg, const Scenario& sc) {
  const auto& d = sc.defaults;
  ResolvedLaw out{PressureLawd::vo3(d.gamma_power), std::nullopt};
  switch (cfg.law) {
    case OffsetKind::VO1:
      out.law = PressureLawd::vo1(cfg.epsilon.value_or(d.epsilon),
                                  cfg.gamma.value_or(d.gamma_singular), cfg.rho_star);
      break;
    case OffsetKind::VO2:
      out.law = PressureLawd::vo2(cfg.epsilon.value_or(d.epsilon),
                                  cfg.gamma.value_or(d.gamma_singular), cfg.rho_star);
      break;
    case OffsetKind::VO3:
      out.law = PressureLawd::vo3(cfg.gamma.value_or(d.gamma_power), cfg.rho_star, cfg.v_ref);
      break;
  }
  if (cfg.scheme == Scheme::Imex) {
    if (cfg.rho_num) {
      out.rho_num = *cfg.rho_num;
    } else {
      RhoNumOptions opts;
      opts.prefactor = cfg.rho_num_prefactor;
      opts.alpha = cfg.vo3_alpha;
      opts.vo3_delta = cfg.vo3_delta.value_or(d.vo3_delta);
      out.rho_num = default_rho_num(out.law, opts);
    }
  }
  return out;
}

namespace {

std::vector<double> output_times(const RunConfig& cfg, const Scenario& sc, double t_final) {
  std::vector<double> times = cfg.snapshots.empty() ? sc.default_snapshots : cfg.snapshots;
  times.erase(std::remove_if(times.begin(), times.end(),
                             [&](double t) { return t >= t_final; }),
              times.end());
  times.push_back(t_final);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

}  // namespace

RunResult run(const RunConfig& cfg, const RunHooks& hooks) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const Scenario sc = build(cfg.scenario);
  RunResult result{{}, {}, {}, resolve_law(cfg, sc)};
  const double t_final = cfg.t_final.value_or(sc.t_final);
  result.snapshot_times = output_times(cfg, sc, t_final);

  CflConfig cfl;
  cfl.cfl_number = cfg.cfl;
  cfl.dt_min = cfg.dt_min;

  SolutionField field = initial_field(sc, cfg.dx, result.law.law);
  const FrozenGhosts ghosts = capture_ghosts(field);

  std::optional<GlimmStepper> glimm;
  std::optional<ImexStepper> imex;
  if (cfg.scheme == Scheme::Imex) {
    ImexConfig icfg;
    icfg.cfl = cfl;
    icfg.handoff = cfg.handoff;
    const SplitLawd split(result.law.law, *result.law.rho_num);
    imex.emplace(split, icfg);
    if (hooks.explicit_stage) imex->set_stage_observer(hooks.explicit_stage);
  } else {
    glimm.emplace(result.law.law, cfl);
  }

  RunLog& log = result.log;
  log.initial_mass = field.mass();
  log.max_density = field.interior_rho().maxCoeff();
  double min_dt = std::numeric_limits<double>::infinity();
  double min_dt_any = std::numeric_limits<double>::infinity();
  std::uint64_t step_index = 0;

  for (double t_out : result.snapshot_times) {
    while (field.time < t_out) {
      StepInfo info;
      try {
        if (glimm) {
          GlimmStepper* g = &*glimm;
          PrimitiveField before;
          if (hooks.explicit_stage) before = to_primitive(field, g->law());
          info = g->step(field, t_out);
          if (hooks.explicit_stage) {
            hooks.explicit_stage(before, to_primitive(field, g->law()), g->law());
          }
        } else {
          info = imex->step(field, t_out);
        }
      } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << cfg.scenario << "/" << to_string(cfg.scheme) << "/" << to_string(cfg.law)
            << " failed at t=" << field.time << " (step " << step_index + 1 << ")";
        if (const auto* ce = dynamic_cast<const ConvergenceError*>(&e); ce && ce->cell() >= 0) {
          msg << " in cell " << ce->cell();
        }
        msg << ": " << e.what();
        throw SolverError(msg.str());
      }
      field = apply_boundary(std::move(field), ghosts);
      ++step_index;
      log.steps.push_back({step_index, field.time, info.dt, info.truncated});
      min_dt_any = std::min(min_dt_any, info.dt);
      if (!info.truncated) min_dt = std::min(min_dt, info.dt);
      log.max_density = std::max(log.max_density, field.interior_rho().maxCoeff());
      if (hooks.after_step) hooks.after_step(field);
    }
    result.snapshots.push_back(field);
  }

  log.min_dt = std::isfinite(min_dt) ? min_dt : (std::isfinite(min_dt_any) ? min_dt_any : 0);
  log.final_mass = field.mass();
  log.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace arz
