#include "arz/glimm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace arz {

void CflConfig::validate() const {
  if (!(cfl_number > 0 && cfl_number <= 0.5)) {
    throw ParameterError("cfl number must lie in (0, 1/2]");
  }
  if (!(dt_min >= 0)) throw ParameterError("dt_min must be non-negative");
  if (!(dt_max_over_dx > 0)) throw ParameterError("dt_max_over_dx must be positive");
}

double van_der_corput(std::uint64_t n) {
  double a = 0;
  double scale = 0.5;
  while (n != 0) {
    if (n & 1u) a += scale;
    scale *= 0.5;
    n >>= 1u;
  }
  return a;
}

namespace {

double cap_dt(double max_speed, double dx, const CflConfig& cfg) {
  const double dt_max = cfg.dt_max_over_dx * dx;
  const double dt = max_speed > 0 ? std::min(cfg.cfl_number * dx / max_speed, dt_max) : dt_max;
  if (!(dt >= cfg.dt_min)) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "time step %.3g below dt_min %.3g", dt, cfg.dt_min);
    throw TimestepUnderflow(msg);
  }
  return dt;
}

}  // namespace

double cfl_dt(const SolutionField& field, const PressureLawd& law, const CflConfig& cfg) {
  double s = 0;
  for (Eigen::Index i = 0; i < field.rho.size(); ++i) {
    s = std::max(s, max_abs_eigenvalue(to_primitive(field.state(i), law), law));
  }
  return cap_dt(s, field.grid.dx(), cfg);
}

std::vector<RiemannSolutiond> solve_interfaces(const PrimitiveField& prims,
                                               const PressureLawd& law) {
  std::vector<RiemannSolutiond> out;
  out.reserve(static_cast<std::size_t>(prims.size() - 1));
  for (Eigen::Index i = 0; i + 1 < prims.size(); ++i) {
    out.push_back(solve(prims.state(i), prims.state(i + 1), law));
  }
  return out;
}

double stable_dt(const std::vector<RiemannSolutiond>& solutions, double dx,
                 const CflConfig& cfg) {
  double s = 0;
  for (const auto& sol : solutions) s = std::max(s, max_wave_speed(sol));
  return cap_dt(s, dx, cfg);
}

PrimitiveField sample_interfaces(const std::vector<RiemannSolutiond>& solutions,
                                 const PrimitiveField& prims, double dt, double dx, double a) {
  PrimitiveField next = prims;
  const Eigen::Index n_storage = prims.size();
  const double ratio = dx / dt;
  for (Eigen::Index j = 1; j + 1 < n_storage; ++j) {
    PrimitiveStated s;
    try {
      if (a < 0.5) {
        s = sample(solutions[static_cast<std::size_t>(j - 1)], a * ratio);
      } else {
        s = sample(solutions[static_cast<std::size_t>(j)], (a - 1) * ratio);
      }
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(e.what(), static_cast<long>(j - 1));
    }
    next.set_state(j, s);
  }
  return next;
}

SolutionField glimm_step(const SolutionField& field, const PressureLawd& law, double dt,
                         double a) {
  const PrimitiveField prims = to_primitive(field, law);
  const auto solutions = solve_interfaces(prims, law);
  SolutionField out = field;
  assign_conserved(out, sample_interfaces(solutions, prims, dt, field.grid.dx(), a), law);
  out.time = field.time + dt;
  return out;
}

GlimmStepper::GlimmStepper(PressureLawd law, CflConfig cfg) : law_(std::move(law)), cfg_(cfg) {
  cfg_.validate();
}

StepInfo GlimmStepper::step(SolutionField& field, double t_limit) {
  const PrimitiveField prims = to_primitive(field, law_);
  const auto solutions = solve_interfaces(prims, law_);
  const double dx = field.grid.dx();
  StepInfo info;
  info.dt = stable_dt(solutions, dx, cfg_);
  if (field.time + info.dt >= t_limit) {
    info.dt = t_limit - field.time;
    info.truncated = true;
  }
  info.a = van_der_corput(counter_++);
  assign_conserved(field, sample_interfaces(solutions, prims, info.dt, dx, info.a), law_);
  field.time = info.truncated ? t_limit : field.time + info.dt;
  return info;
}

}  // namespace arz
