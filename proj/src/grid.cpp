#include "arz/grid.hpp"

namespace arz {

Grid1D::Grid1D(double lo, double hi, Eigen::Index n) : x_min(lo), x_max(hi), n_cells(n) {
  if (!(hi > lo) || n <= 0) throw ParameterError("grid needs x_max > x_min and n_cells > 0");
}

Eigen::ArrayXd Grid1D::centers() const {
  Eigen::ArrayXd x(n_cells);
  for (Eigen::Index j = 0; j < n_cells; ++j) x[j] = center(j);
  return x;
}

SolutionField::SolutionField(const Grid1D& g)
    : grid(g), rho(Eigen::ArrayXd::Zero(g.storage_size())),
      y(Eigen::ArrayXd::Zero(g.storage_size())) {}

PrimitiveField to_primitive(const SolutionField& field, const PressureLawd& law) {
  PrimitiveField out{Eigen::ArrayXd(field.rho.size()), Eigen::ArrayXd(field.rho.size())};
  for (Eigen::Index i = 0; i < field.rho.size(); ++i) {
    out.set_state(i, to_primitive(field.state(i), law));
  }
  return out;
}

void assign_conserved(SolutionField& field, const PrimitiveField& prims,
                      const PressureLawd& law, bool include_ghosts) {
  const Eigen::Index skip = include_ghosts ? 0 : Grid1D::ghost_width;
  for (Eigen::Index i = skip; i < prims.size() - skip; ++i) {
    field.set_state(i, to_conserved(prims.state(i), law));
  }
}

FrozenGhosts capture_ghosts(const SolutionField& initial) {
  const Eigen::Index last = initial.rho.size() - 1;
  return {initial.state(0), initial.state(last)};
}

SolutionField apply_boundary(SolutionField field, const FrozenGhosts& ghosts,
                             BoundaryPolicy policy) {
  switch (policy) {
    case BoundaryPolicy::ConstantExtension:
      field.set_state(0, ghosts.left);
      field.set_state(field.rho.size() - 1, ghosts.right);
      break;
  }
  return field;
}

}  // namespace arz
