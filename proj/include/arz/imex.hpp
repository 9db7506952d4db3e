#pragma once

// Two-stage splitting p = p_exp + p_imp:
//   1. random-choice step of the ARZ system with offset p_exp (explicit, CFL
//      bounded by the p_exp eigenvalues);
//   2. implicit upwind transport with velocity -p_imp: an Engquist-Osher
//      sweep for rho followed by backward substitution for y.
// Both implicit sweeps run right to left; the right ghost closes them.

#include <cstdint>
#include <functional>

#include <Eigen/Core>

#include "arz/glimm.hpp"
#include "arz/grid.hpp"
#include "arz/pressure.hpp"

namespace arz {

/// How the explicit stage reads its velocity from the stored (rho, y).
enum class Handoff {
  /// Stage 1 advances (rho, v) with v = y / rho - p(rho); y is rebuilt with
  /// the full law afterwards.
  Primitive,
  /// Stage 1 advances (rho, y) itself, i.e. the velocity seen by the p_exp
  /// system is y / rho - p_exp(rho) = v + p_imp(rho).
  Conserved,
};

inline const char* to_string(Handoff h) {
  return h == Handoff::Primitive ? "primitive" : "conserved";
}

struct ImexConfig {
  double newton_tol = 1e-12;
  int newton_max_iter = 100;
  CflConfig cfl;
  Handoff handoff = Handoff::Conserved;

  void validate() const;
};

/// Called with the explicit-stage input and output (storage layout, ghosts
/// included) and the law that stage used.
using StageObserver =
    std::function<void(const PrimitiveField& before, const PrimitiveField& after,
                       const PressureLawd& law)>;

/// Velocity variable of the explicit stage for each storage cell.
PrimitiveField explicit_stage_input(const SolutionField& field, const SplitLawd& split,
                                    Handoff handoff);

/// Stage 1. Returns (rho, y) at n + 1/2 with y = rho (v + p(rho)) for the full
/// law, ready for the implicit sweeps.
SolutionField explicit_step(const SolutionField& field, const SplitLawd& split, double dt,
                            double a, Handoff handoff = Handoff::Conserved);

/// Engquist-Osher sweep for d_t rho - d_x(rho p_imp(rho)) = 0. `rho_half`
/// uses the storage layout; its ghosts pass through unchanged.
Eigen::ArrayXd implicit_density_step(const Eigen::ArrayXd& rho_half, const SplitLawd& split,
                                     double dt, double dx, double newton_tol = 1e-12,
                                     int max_iter = 100);

/// Implicit upwind update of y with velocity -p_imp(rho_new).
Eigen::ArrayXd implicit_y_step(const Eigen::ArrayXd& y_half, const Eigen::ArrayXd& rho_new,
                               const SplitLawd& split, double dt, double dx);

class ImexStepper {
 public:
  ImexStepper(SplitLawd split, ImexConfig cfg);

  StepInfo step(SolutionField& field, double t_limit);
  void set_stage_observer(StageObserver obs) { observer_ = std::move(obs); }

  const SplitLawd& split() const { return split_; }

 private:
  SplitLawd split_;
  ImexConfig cfg_;
  std::uint64_t counter_ = 1;
  StageObserver observer_;
};

/// One full step at a fixed dt and sampling point.
SolutionField imex_step(const SolutionField& field, const SplitLawd& split, double dt,
                        double a, const ImexConfig& cfg = {});

}  // namespace arz
