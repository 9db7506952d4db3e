#include "arz/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PrimitiveStated vacuum() { return {0, kNaN}; }

Scenario transport() {
  Scenario sc;
  sc.name = "transport";
  sc.pieces = {{0.0, {0.4, 1}}, {0.5, {0.95, 1}}};
  sc.t_final = 0.4;
  sc.exact = [](double t, double x) -> PrimitiveStated {
    return x < 0.5 + t ? PrimitiveStated{0.4, 1} : PrimitiveStated{0.95, 1};
  };
  return sc;
}

Scenario decongestion() {
  Scenario sc;
  sc.name = "decongestion";
  sc.pieces = {{0.0, {0.95, 1}}, {0.5, {0.95, 2}}};
  sc.t_final = 0.2;
  sc.exact = [](double t, double x) -> PrimitiveStated {
    if (x < 0.5 + t) return {0.95, 1};
    if (x < 0.5 + 2 * t) return vacuum();
    return {0.95, 2};
  };
  return sc;
}

Scenario congestion() {
  Scenario sc;
  sc.name = "congestion";
  sc.pieces = {{0.0, {0.95, 2}}, {0.5, {0.95, 1}}};
  sc.t_final = 0.01;
  // Shock speed -18 from [[rho]] = 0.05, [[rho v]] = 1 - 1.9.
  sc.exact = [](double t, double x) -> PrimitiveStated {
    if (x < 0.5 - 18 * t) return {0.95, 2};
    if (x <= 0.5 + t) return {1, 1};
    return {0.95, 1};
  };
  return sc;
}

Scenario two_blocks() {
  Scenario sc;
  sc.name = "two_blocks";
  sc.pieces = {{0.0, {0, 0}},
               {0.2, {0.95, 2}},
               {0.3, {0, 0}},
               {0.35, {0.9, 1}},
               {0.5, {0, 0}}};
  sc.t_final = 0.3;
  // The fast block hits the slow one at t = 0.05, x = 0.4. A congestion front
  // (speed -18) then runs through it until t = 0.055; afterwards the fast
  // block's mass 0.095 travels at speed 1 at density 1.
  sc.exact = [](double t, double x) -> PrimitiveStated {
    const double slow_tail = 0.35 + t;
    const double slow_head = 0.5 + t;
    if (x >= slow_tail && x <= slow_head) return {0.9, 1};
    if (t <= 0.05) {
      if (x >= 0.2 + 2 * t && x <= 0.3 + 2 * t) return {0.95, 2};
      return vacuum();
    }
    if (t <= 0.055) {
      const double front = 0.4 - 18 * (t - 0.05);
      if (x >= front && x < slow_tail) return {1, 1};
      if (x >= 0.2 + 2 * t && x < front) return {0.95, 2};
      return vacuum();
    }
    if (x >= 0.255 + t && x < slow_tail) return {1, 1};
    return vacuum();
  };
  return sc;
}

Scenario case_ai() {
  Scenario sc;
  sc.name = "AI";
  sc.pieces = {{0.0, {0.7, 0.5}}, {0.5, {0.5, 0.1}}};
  sc.t_final = 0.6;
  sc.defaults.gamma_singular = 1;
  sc.defaults.gamma_power = 64;
  sc.default_snapshots = {0.2, 0.4, 0.6};
  sc.exact = [](double t, double x) -> PrimitiveStated {
    if (x < 0.5 - 25.0 / 30.0 * t) return {0.7, 0.5};
    if (x <= 0.5 + 0.1 * t) return {1, 0.1};
    return {0.5, 0.1};
  };
  return sc;
}

Scenario case_aiii() {
  Scenario sc;
  sc.name = "AIII";
  sc.pieces = {{0.0, {0.7, 0.1}}, {0.5, {0.5, 0.5}}};
  sc.t_final = 0.8;
  sc.defaults.gamma_singular = 1;
  sc.defaults.gamma_power = 64;
  sc.default_snapshots = {0.27, 0.53, 0.8};
  sc.exact = [](double t, double x) -> PrimitiveStated {
    if (x < 0.5 + 0.1 * t) return {0.7, 0.1};
    if (x < 0.5 + 0.5 * t) return vacuum();
    return {0.5, 0.5};
  };
  return sc;
}

}  // namespace

PrimitiveStated Scenario::initial(double x) const {
  PrimitiveStated s = pieces.front().state;
  for (const auto& piece : pieces) {
    if (x >= piece.x_start) s = piece.state;
  }
  return s;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"transport",  "decongestion", "congestion",
                                                 "two_blocks", "AI",           "AIII"};
  return names;
}

Scenario build(const std::string& name) {
  if (name == "transport") return transport();
  if (name == "decongestion") return decongestion();
  if (name == "congestion") return congestion();
  if (name == "two_blocks") return two_blocks();
  if (name == "AI") return case_ai();
  if (name == "AIII") return case_aiii();
  throw UnknownScenario("unknown scenario '" + name + "'");
}

SolutionField initial_field(const Scenario& sc, double dx, const PressureLawd& law) {
  const auto n = static_cast<Eigen::Index>(std::llround((sc.x_max - sc.x_min) / dx));
  if (n <= 0) throw ParameterError("dx larger than the domain");
  const Grid1D grid(sc.x_min, sc.x_max, n);
  const double h = grid.dx();

  std::vector<Piece> snapped = sc.pieces;
  for (auto& piece : snapped) {
    piece.x_start = sc.x_min + std::round((piece.x_start - sc.x_min) / h) * h;
  }

  SolutionField field(grid);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double x = grid.center(j);
    PrimitiveStated s = snapped.front().state;
    for (const auto& piece : snapped) {
      if (x >= piece.x_start) s = piece.state;
    }
    if (s.rho >= law.upper_density()) {
      throw DomainError("initial density outside the law's domain");
    }
    field.set_state(j + Grid1D::ghost_width, to_conserved(s, law));
  }
  field.set_state(0, field.state(1));
  field.set_state(n + 1, field.state(n));
  return field;
}

double error_l1(const SolutionField& numeric, const ExactSolution& exact, double t) {
  const auto& grid = numeric.grid;
  double sum = 0;
  for (Eigen::Index j = 0; j < grid.n_cells; ++j) {
    sum += std::abs(numeric.rho[j + Grid1D::ghost_width] - exact(t, grid.center(j)).rho);
  }
  return sum * grid.dx();
}

}  // namespace arz
