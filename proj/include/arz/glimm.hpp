#pragma once

#include <cstdint>
#include <vector>

#include "arz/grid.hpp"
#include "arz/pressure.hpp"
#include "arz/riemann.hpp"

namespace arz {

struct CflConfig {
  /// Fraction of dx / max|lambda|; at most 1/2 so interface fans never meet.
  double cfl_number = 0.5;
  /// A step below this aborts the run.
  double dt_min = 1e-12;
  /// Cap as a multiple of dx, so vacuum or zero-speed fields still advance.
  double dt_max_over_dx = 1.0;

  void validate() const;
};

/// Base-2 radical inverse of n.
double van_der_corput(std::uint64_t n);

/// cfl * dx / max over cells of max(|v - rho p'(rho)|, |v|), capped at dt_max.
double cfl_dt(const SolutionField& field, const PressureLawd& law, const CflConfig& cfg);

/// One Riemann problem per interface i (between storage cells i and i+1).
std::vector<RiemannSolutiond> solve_interfaces(const PrimitiveField& prims,
                                               const PressureLawd& law);

/// Like cfl_dt but bounded by every wave speed the interface problems emit.
double stable_dt(const std::vector<RiemannSolutiond>& solutions, double dx,
                 const CflConfig& cfg);

/// Random-choice sampling of the interface solutions at x_{j-1/2} + a dx.
/// Ghost cells are copied through unchanged.
PrimitiveField sample_interfaces(const std::vector<RiemannSolutiond>& solutions,
                                 const PrimitiveField& prims, double dt, double dx, double a);

/// One Glimm update of `field` with the given law. dt must satisfy the CFL
/// bound; a is the sampling point in [0, 1).
SolutionField glimm_step(const SolutionField& field, const PressureLawd& law, double dt,
                         double a);

struct StepInfo {
  double dt = 0;
  /// The step was shortened to land on t_limit.
  bool truncated = false;
  /// Sampling point used by the random-choice stage.
  double a = 0;
};

/// Owns the Van der Corput counter of a Glimm run.
class GlimmStepper {
 public:
  GlimmStepper(PressureLawd law, CflConfig cfg);

  /// Advances by one CFL step, truncated so time does not pass t_limit.
  StepInfo step(SolutionField& field, double t_limit);

  const PressureLawd& law() const { return law_; }
  std::uint64_t steps_taken() const { return counter_ - 1; }

 private:
  PressureLawd law_;
  CflConfig cfg_;
  std::uint64_t counter_ = 1;
};

}  // namespace arz
