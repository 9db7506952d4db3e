#pragma once

// Exact Riemann solver for the ARZ system with any C2, increasing, convex
// velocity offset. The 1-waves lie on curves w = v + p(rho) = const, the
// 2-waves are contacts moving with v.

#include <algorithm>
#include <cmath>

#include "arz/grid.hpp"
#include "arz/pressure.hpp"
#include "arz/root.hpp"

namespace arz {

enum class WaveCase {
  Constant,
  ShockContact,
  RarefactionContact,
  RarefactionVacuumContact,
  PureRarefaction,
  /// A single 2-contact. Covers vacuum on the left as well as data whose
  /// 1-wave has zero strength.
  PureContact,
};

inline const char* to_string(WaveCase c) {
  switch (c) {
    case WaveCase::Constant: return "constant";
    case WaveCase::ShockContact: return "shock+contact";
    case WaveCase::RarefactionContact: return "rarefaction+contact";
    case WaveCase::RarefactionVacuumContact: return "rarefaction+vacuum+contact";
    case WaveCase::PureRarefaction: return "rarefaction";
    case WaveCase::PureContact: return "contact";
  }
  return "?";
}

template <typename Scalar>
struct RiemannSolution {
  PrimitiveState<Scalar> left;
  PrimitiveState<Scalar> right;
  WaveCase wave_case = WaveCase::Constant;
  /// Intermediate state. For the vacuum cases this is (0, v_L + p(rho_L)).
  PrimitiveState<Scalar> star;
  Scalar shock_speed{0};
  Scalar fan_lo{0};
  Scalar fan_hi{0};
  Scalar contact_speed{0};
  /// Riemann invariant w = v + p(rho) of the left state.
  Scalar left_w{0};
  const PressureLaw<Scalar>* law = nullptr;

  bool has_fan() const {
    return wave_case == WaveCase::RarefactionContact ||
           wave_case == WaveCase::RarefactionVacuumContact ||
           wave_case == WaveCase::PureRarefaction;
  }
};

using RiemannSolutiond = RiemannSolution<double>;

/// Relative size below which a 1-wave is treated as having zero strength.
inline constexpr double kZeroWaveTol = 1e-12;

template <typename Scalar>
RiemannSolution<Scalar> solve(const PrimitiveState<Scalar>& left,
                              const PrimitiveState<Scalar>& right,
                              const PressureLaw<Scalar>& law) {
  RiemannSolution<Scalar> sol;
  sol.left = left;
  sol.right = right;
  sol.law = &law;

  const bool left_vac = left.is_vacuum(law);
  const bool right_vac = right.is_vacuum(law);

  if ((left_vac && right_vac) || left == right) {
    sol.wave_case = WaveCase::Constant;
    sol.star = left;
    sol.contact_speed = left_vac ? Scalar(0) : left.v;
    return sol;
  }
  if (left_vac) {
    sol.wave_case = WaveCase::PureContact;
    sol.star = {0, right.v};
    sol.contact_speed = right.v;
    return sol;
  }

  sol.left_w = left.v + law.value(left.rho);
  sol.fan_lo = lambda1(left, law);

  if (right_vac) {
    sol.wave_case = WaveCase::PureRarefaction;
    sol.star = {0, sol.left_w};
    sol.fan_hi = sol.left_w;
    sol.contact_speed = sol.left_w;
    return sol;
  }

  sol.contact_speed = right.v;
  if (right.v > sol.left_w) {
    sol.wave_case = WaveCase::RarefactionVacuumContact;
    sol.star = {0, sol.left_w};
    sol.fan_hi = sol.left_w;
    return sol;
  }

  // rho_* from w_* = w_L and v_* = v_R.
  const Scalar rho_mid = law.inverse(sol.left_w - right.v);
  sol.star = {rho_mid, right.v};
  const Scalar strength = rho_mid - left.rho;
  if (right.v == left.v ||
      std::abs(strength) <= Scalar(kZeroWaveTol) * std::max(rho_mid, left.rho)) {
    sol.wave_case = WaveCase::PureContact;
    sol.star = left;
    return sol;
  }
  if (right.v < left.v) {
    sol.wave_case = WaveCase::ShockContact;
    // (rho* v* - rhoL vL) / (rho* - rhoL), arranged to avoid cancellation.
    sol.shock_speed = right.v + left.rho * (right.v - left.v) / strength;
    return sol;
  }
  sol.wave_case = WaveCase::RarefactionContact;
  sol.fan_hi = sol.star.is_vacuum(law) ? sol.star.v : lambda1(sol.star, law);
  return sol;
}

namespace detail {

/// Inside a 1-rarefaction: p(rho) + rho p'(rho) = w_L - xi, v = w_L - p(rho).
template <typename Scalar>
PrimitiveState<Scalar> sample_fan(const RiemannSolution<Scalar>& sol, Scalar xi) {
  const auto& law = *sol.law;
  const Scalar target = sol.left_w - xi;
  const Scalar rho_lo = sol.star.rho;
  const Scalar rho_hi = sol.left.rho;
  const Scalar span = sol.fan_hi - sol.fan_lo;
  const Scalar frac = span > 0 ? (xi - sol.fan_lo) / span : Scalar(0);
  const Scalar guess = rho_hi + frac * (rho_lo - rho_hi);

  RootOptions<Scalar> opts;
  opts.abs_tol = Scalar(1e-13) * std::max(Scalar(1), std::abs(target));
  const Scalar rho = safeguarded_newton<Scalar>(
      [&](Scalar r) {
        const Scalar p1 = law.derivative(r);
        return std::pair<Scalar, Scalar>{law.value(r) + r * p1 - target,
                                         2 * p1 + r * law.second_derivative(r)};
      },
      rho_lo, rho_hi, guess, opts);
  if (rho < law.vacuum_density()) return {0, sol.left_w};
  return {rho, sol.left_w - law.value(rho)};
}

}  // namespace detail

/// Evaluates the self-similar solution at xi = x / t. Exactly at a shock or
/// contact the right-limit state is returned.
template <typename Scalar>
PrimitiveState<Scalar> sample(const RiemannSolution<Scalar>& sol, Scalar xi) {
  switch (sol.wave_case) {
    case WaveCase::Constant:
      return sol.left;
    case WaveCase::PureContact:
      return xi < sol.contact_speed ? sol.left.is_vacuum(*sol.law)
                                          ? PrimitiveState<Scalar>{0, sol.contact_speed}
                                          : sol.left
                                    : sol.right;
    case WaveCase::ShockContact:
      if (xi < sol.shock_speed) return sol.left;
      if (xi < sol.contact_speed) return sol.star;
      return sol.right;
    case WaveCase::RarefactionContact:
      if (xi <= sol.fan_lo) return sol.left;
      if (xi < sol.fan_hi) return detail::sample_fan(sol, xi);
      if (xi < sol.contact_speed) return sol.star;
      return sol.right;
    case WaveCase::RarefactionVacuumContact:
      if (xi <= sol.fan_lo) return sol.left;
      if (xi < sol.fan_hi) return detail::sample_fan(sol, xi);
      if (xi < sol.contact_speed) return {0, xi};
      return sol.right;
    case WaveCase::PureRarefaction:
      if (xi <= sol.fan_lo) return sol.left;
      if (xi < sol.fan_hi) return detail::sample_fan(sol, xi);
      return {0, sol.left_w};
  }
  return sol.left;
}

/// Bound on the speed of every wave the solution emits, together with the
/// characteristic speeds of the outer states. The star state of a shock is
/// not included: its lambda_1 points into the shock and carries no signal.
template <typename Scalar>
Scalar max_wave_speed(const RiemannSolution<Scalar>& sol) {
  using std::abs;
  const auto& law = *sol.law;
  Scalar s = std::max(max_abs_eigenvalue(sol.left, law), max_abs_eigenvalue(sol.right, law));
  switch (sol.wave_case) {
    case WaveCase::Constant:
      break;
    case WaveCase::PureContact:
      s = std::max(s, abs(sol.contact_speed));
      break;
    case WaveCase::ShockContact:
      s = std::max({s, abs(sol.shock_speed), abs(sol.contact_speed)});
      break;
    case WaveCase::RarefactionContact:
    case WaveCase::RarefactionVacuumContact:
    case WaveCase::PureRarefaction:
      s = std::max({s, abs(sol.fan_lo), abs(sol.fan_hi), abs(sol.contact_speed)});
      break;
  }
  return s;
}

}  // namespace arz
