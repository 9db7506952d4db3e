#pragma once

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "arz/errors.hpp"
#include "arz/pressure.hpp"

namespace arz {

/// (rho, v). In vacuum (rho below the law's vacuum density) v carries no
/// physical meaning; it is kept only as a transport value for diagnostics.
template <typename Scalar>
struct PrimitiveState {
  Scalar rho{0};
  Scalar v{0};

  bool is_vacuum(const PressureLaw<Scalar>& law) const { return rho < law.vacuum_density(); }
  friend bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

/// (rho, y) with y = rho (v + p(rho)).
template <typename Scalar>
struct ConservedState {
  Scalar rho{0};
  Scalar y{0};
  friend bool operator==(const ConservedState&, const ConservedState&) = default;
};

using PrimitiveStated = PrimitiveState<double>;
using ConservedStated = ConservedState<double>;

inline constexpr double kVelocityErrorTol = 1e-8;

template <typename Scalar>
ConservedState<Scalar> to_conserved(const PrimitiveState<Scalar>& s,
                                    const PressureLaw<Scalar>& law) {
  if (s.is_vacuum(law)) return {0, 0};
  return {s.rho, s.rho * (s.v + law.value(s.rho))};
}

/// Inverse of to_conserved. Velocities in [-1e-8, 0) are rounding noise and
/// clamp to zero; anything more negative is an invariant-region violation.
template <typename Scalar>
PrimitiveState<Scalar> to_primitive(const ConservedState<Scalar>& c,
                                    const PressureLaw<Scalar>& law) {
  if (c.rho < law.vacuum_density()) return {0, 0};
  Scalar v = c.y / c.rho - law.value(c.rho);
  if (v < 0) {
    // Scale the tolerance by the offset magnitude: v is the difference of
    // two numbers of that size.
    const Scalar scale = std::max(Scalar(1), c.y / c.rho);
    if (v < -Scalar(kVelocityErrorTol) * scale) {
      throw NegativeVelocityError("negative velocity " +
                                  format_number(static_cast<double>(v)) +
                                  " at density " + format_number(static_cast<double>(c.rho)));
    }
    v = 0;
  }
  return {c.rho, v};
}

/// Characteristic speeds lambda_1 = v - rho p'(rho) <= lambda_2 = v.
template <typename Scalar>
Scalar lambda1(const PrimitiveState<Scalar>& s, const PressureLaw<Scalar>& law) {
  return s.v - s.rho * law.derivative(s.rho);
}

/// max(|lambda_1|, |lambda_2|); zero in vacuum.
template <typename Scalar>
Scalar max_abs_eigenvalue(const PrimitiveState<Scalar>& s, const PressureLaw<Scalar>& law) {
  using std::abs;
  if (s.is_vacuum(law)) return 0;
  return std::max(abs(lambda1(s, law)), abs(s.v));
}

/// Uniform mesh on [x_min, x_max] with one ghost cell on each side.
struct Grid1D {
  static constexpr Eigen::Index ghost_width = 1;

  double x_min = 0;
  double x_max = 1;
  Eigen::Index n_cells = 0;

  Grid1D() = default;
  Grid1D(double lo, double hi, Eigen::Index n);

  double dx() const { return (x_max - x_min) / static_cast<double>(n_cells); }
  /// Center of interior cell j (0-based, ghosts excluded).
  double center(Eigen::Index j) const { return x_min + (static_cast<double>(j) + 0.5) * dx(); }
  Eigen::Index storage_size() const { return n_cells + 2 * ghost_width; }
  Eigen::ArrayXd centers() const;
};

/// Cell averages of (rho, y) on storage index 0..n+1; 0 and n+1 are ghosts.
struct SolutionField {
  Grid1D grid;
  Eigen::ArrayXd rho;
  Eigen::ArrayXd y;
  double time = 0;

  SolutionField() = default;
  explicit SolutionField(const Grid1D& g);

  Eigen::Index n_cells() const { return grid.n_cells; }
  ConservedStated state(Eigen::Index storage_index) const {
    return {rho[storage_index], y[storage_index]};
  }
  void set_state(Eigen::Index storage_index, const ConservedStated& s) {
    rho[storage_index] = s.rho;
    y[storage_index] = s.y;
  }
  auto interior_rho() const { return rho.segment(Grid1D::ghost_width, grid.n_cells); }
  auto interior_y() const { return y.segment(Grid1D::ghost_width, grid.n_cells); }

  double mass() const { return interior_rho().sum() * grid.dx(); }
};

/// (rho, v) arrays over the same storage layout as SolutionField.
struct PrimitiveField {
  Eigen::ArrayXd rho;
  Eigen::ArrayXd v;

  PrimitiveStated state(Eigen::Index i) const { return {rho[i], v[i]}; }
  void set_state(Eigen::Index i, const PrimitiveStated& s) {
    rho[i] = s.rho;
    v[i] = s.v;
  }
  Eigen::Index size() const { return rho.size(); }
};

PrimitiveField to_primitive(const SolutionField& field, const PressureLawd& law);
/// Writes the conserved form of `prims` into `field`. Ghost cells are left
/// alone unless `include_ghosts` is set.
void assign_conserved(SolutionField& field, const PrimitiveField& prims,
                      const PressureLawd& law, bool include_ghosts = false);

enum class BoundaryPolicy { ConstantExtension };

/// Ghost values frozen at t = 0: the policy holds the initial boundary states
/// (constant inflow on the left, constant downstream state on the right).
struct FrozenGhosts {
  ConservedStated left;
  ConservedStated right;
};

FrozenGhosts capture_ghosts(const SolutionField& initial);
SolutionField apply_boundary(SolutionField field, const FrozenGhosts& ghosts,
                             BoundaryPolicy policy = BoundaryPolicy::ConstantExtension);

}  // namespace arz
