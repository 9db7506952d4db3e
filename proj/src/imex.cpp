#include "arz/imex.hpp"

#include <algorithm>
#include <string>

#include "arz/root.hpp"

namespace arz {

void ImexConfig::validate() const {
  if (!(newton_tol > 0)) throw ParameterError("newton_tol must be positive");
  if (newton_max_iter <= 0) throw ParameterError("newton_max_iter must be positive");
  cfl.validate();
}

PrimitiveField explicit_stage_input(const SolutionField& field, const SplitLawd& split,
                                    Handoff handoff) {
  if (handoff == Handoff::Primitive) return to_primitive(field, split.full());
  PrimitiveField prims{Eigen::ArrayXd(field.rho.size()), Eigen::ArrayXd(field.rho.size())};
  for (Eigen::Index i = 0; i < field.rho.size(); ++i) {
    // y / rho - p_exp >= y / rho - p >= 0, so the full-law check covers it.
    const PrimitiveStated v = to_primitive(field.state(i), split.full());
    if (v.rho == 0) {
      prims.set_state(i, {0, 0});
    } else {
      prims.set_state(i, {v.rho, v.v + split.p_imp(v.rho)});
    }
  }
  return prims;
}

namespace {

/// Rebuilds the full-law y from the explicit-stage output.
void store_half_step(SolutionField& half, const PrimitiveField& after, const SplitLawd& split,
                     Handoff handoff) {
  const Eigen::Index n_storage = after.size();
  for (Eigen::Index i = Grid1D::ghost_width; i < n_storage - Grid1D::ghost_width; ++i) {
    const PrimitiveStated s = after.state(i);
    if (s.is_vacuum(split.full())) {
      half.set_state(i, {0, 0});
    } else if (handoff == Handoff::Primitive) {
      half.set_state(i, {s.rho, s.rho * (s.v + split.full().value(s.rho))});
    } else {
      half.set_state(i, {s.rho, s.rho * (s.v + split.p_exp(s.rho))});
    }
  }
}

SolutionField run_explicit(const SolutionField& field, const SplitLawd& split,
                           const PrimitiveField& prims,
                           const std::vector<RiemannSolutiond>& solutions, double dt, double a,
                           Handoff handoff, const StageObserver& observer) {
  const PrimitiveField after = sample_interfaces(solutions, prims, dt, field.grid.dx(), a);
  if (observer) observer(prims, after, split.explicit_part());
  SolutionField half = field;
  store_half_step(half, after, split, handoff);
  return half;
}

void implicit_stages(SolutionField& half, const SplitLawd& split, double dt,
                     const ImexConfig& cfg) {
  const double dx = half.grid.dx();
  Eigen::ArrayXd rho_new =
      implicit_density_step(half.rho, split, dt, dx, cfg.newton_tol, cfg.newton_max_iter);
  half.y = implicit_y_step(half.y, rho_new, split, dt, dx);
  half.rho = std::move(rho_new);
}

}  // namespace

SolutionField explicit_step(const SolutionField& field, const SplitLawd& split, double dt,
                            double a, Handoff handoff) {
  const PrimitiveField prims = explicit_stage_input(field, split, handoff);
  const auto solutions = solve_interfaces(prims, split.explicit_part());
  SolutionField half = run_explicit(field, split, prims, solutions, dt, a, handoff, {});
  half.time = field.time + dt;
  return half;
}

Eigen::ArrayXd implicit_density_step(const Eigen::ArrayXd& rho_half, const SplitLawd& split,
                                     double dt, double dx, double newton_tol, int max_iter) {
  const double c = dt / dx;
  const double rho_num = split.rho_num();
  const double upper = split.full().upper_density();
  Eigen::ArrayXd rho = rho_half;
  const Eigen::Index last = rho.size() - 1;

  RootOptions<double> opts;
  opts.max_iter = max_iter;

  // Cell j solves rho + c rho p_imp(rho) = rho_half_j + c rho_{j+1} p_imp(rho_{j+1}).
  for (Eigen::Index j = last - 1; j >= 1; --j) {
    const double right = rho[j + 1];
    const double rhs = rho_half[j] + c * right * split.p_imp(right);
    if (rhs <= rho_num) {
      rho[j] = rhs;
      continue;
    }
    const double hi = std::min(rhs, upper);
    // The residual carries terms of size rhs; its slope is at least rhs / rho
    // near the root, so this keeps the density error near newton_tol.
    opts.abs_tol = newton_tol * std::max(1.0, rhs);
    try {
      rho[j] = safeguarded_newton<double>(
          [&](double r) {
            const double pi = split.p_imp(r);
            return std::pair<double, double>{r + c * r * pi - rhs,
                                             1 + c * (pi + r * split.p_imp_derivative(r))};
          },
          rho_num, hi, std::min(rho_half[j], hi), opts, static_cast<long>(j - 1));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string("implicit density sweep: ") + e.what(), e.cell());
    }
  }
  return rho;
}

Eigen::ArrayXd implicit_y_step(const Eigen::ArrayXd& y_half, const Eigen::ArrayXd& rho_new,
                               const SplitLawd& split, double dt, double dx) {
  const double c = dt / dx;
  Eigen::ArrayXd y = y_half;
  const Eigen::Index last = y.size() - 1;
  double inflow = c * split.p_imp(rho_new[last]);
  for (Eigen::Index j = last - 1; j >= 1; --j) {
    const double local = c * split.p_imp(rho_new[j]);
    y[j] = (y_half[j] + inflow * y[j + 1]) / (1 + local);
    inflow = local;
  }
  return y;
}

ImexStepper::ImexStepper(SplitLawd split, ImexConfig cfg)
    : split_(std::move(split)), cfg_(cfg) {
  cfg_.validate();
}

StepInfo ImexStepper::step(SolutionField& field, double t_limit) {
  const PrimitiveField prims = explicit_stage_input(field, split_, cfg_.handoff);
  const auto solutions = solve_interfaces(prims, split_.explicit_part());
  StepInfo info;
  info.dt = stable_dt(solutions, field.grid.dx(), cfg_.cfl);
  if (field.time + info.dt >= t_limit) {
    info.dt = t_limit - field.time;
    info.truncated = true;
  }
  info.a = van_der_corput(counter_++);
  SolutionField half =
      run_explicit(field, split_, prims, solutions, info.dt, info.a, cfg_.handoff, observer_);
  implicit_stages(half, split_, info.dt, cfg_);
  half.time = info.truncated ? t_limit : field.time + info.dt;
  field = std::move(half);
  return info;
}

SolutionField imex_step(const SolutionField& field, const SplitLawd& split, double dt,
                        double a, const ImexConfig& cfg) {
  SolutionField half = explicit_step(field, split, dt, a, cfg.handoff);
  implicit_stages(half, split, dt, cfg);
  return half;
}

}  // namespace arz
