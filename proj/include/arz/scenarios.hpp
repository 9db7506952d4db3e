#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arz/grid.hpp"
#include "arz/pressure.hpp"

namespace arz {

/// Law parameters a scenario runs with unless overridden.
struct LawDefaults {
  double epsilon = 1e-3;
  /// Exponent for VO1 / VO2.
  double gamma_singular = 2;
  /// Exponent for VO3.
  double gamma_power = 4;
  /// VO3 truncation rho_num = rho_star (1 - vo3_delta).
  double vo3_delta = 1e-2;
};

/// One constant piece of piecewise-constant initial data, starting at x_start.
struct Piece {
  double x_start;
  PrimitiveStated state;
};

/// Reference solution; velocity is NaN where the state is vacuum.
using ExactSolution = std::function<PrimitiveStated(double t, double x)>;

struct Scenario {
  std::string name;
  double x_min = 0;
  double x_max = 1;
  /// Sorted by x_start; the first piece starts at x_min.
  std::vector<Piece> pieces;
  double t_final = 0;
  LawDefaults defaults;
  std::vector<double> default_snapshots;
  std::optional<ExactSolution> exact;

  /// Point value of the initial data.
  PrimitiveStated initial(double x) const;
};

const std::vector<std::string>& scenario_names();

/// transport, decongestion, congestion, two_blocks, AI, AIII.
Scenario build(const std::string& name);

/// Cell averages of the initial data. Jumps are snapped to the nearest cell
/// interface, so every cell is uniform. Ghosts copy their interior neighbor.
SolutionField initial_field(const Scenario& sc, double dx, const PressureLawd& law);

/// sum_j |rho_j - rho_exact(t, x_j)| dx over interior cells.
double error_l1(const SolutionField& numeric, const ExactSolution& exact, double t);

}  // namespace arz
