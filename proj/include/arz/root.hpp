#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "arz/errors.hpp"

namespace arz {

template <typename Scalar>
struct RootOptions {
  Scalar abs_tol = Scalar(1e-12);
  int max_iter = 100;
};

/// Safeguarded Newton iteration for an increasing scalar function on (lo, hi).
///
/// `f(x)` must return a pair {value, derivative}. The caller guarantees
/// f(lo) <= 0 <= f(hi); the endpoints themselves are never evaluated, so `hi`
/// may sit on a singularity. A Newton step that leaves the current bracket is
/// replaced by bisection. Iteration stops when |f| <= abs_tol or when the
/// bracket has shrunk to a few ulps (the residual cannot improve further in
/// floating point).
template <typename Scalar, typename F>
Scalar safeguarded_newton(F&& f, Scalar lo, Scalar hi, Scalar guess,
                          const RootOptions<Scalar>& opts, long cell = -1) {
  using std::abs;
  if (!(guess > lo && guess < hi)) guess = lo + (hi - lo) / 2;
  Scalar x = guess;
  Scalar best = x;
  Scalar best_res = std::numeric_limits<Scalar>::infinity();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar step = hi - lo;
  Scalar step_old = step;
  for (int it = 0; it < opts.max_iter; ++it) {
    const auto [value, slope] = f(x);
    if (abs(value) < best_res) {
      best_res = abs(value);
      best = x;
    }
    if (abs(value) <= opts.abs_tol) return x;
    if (value < 0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4 * eps * std::max(abs(lo), abs(hi))) return best;
    Scalar next = x - value / slope;
    // Bisect when Newton leaves the bracket or would not halve the previous
    // step (slow creep along a near-singular branch).
    if (!(next > lo && next < hi) || !std::isfinite(static_cast<double>(next)) ||
        2 * abs(next - x) > abs(step_old)) {
      next = lo + (hi - lo) / 2;
    }
    step_old = step;
    step = next - x;
    x = next;
  }
  throw ConvergenceError("root solve did not converge within " +
                             std::to_string(opts.max_iter) + " iterations",
                         cell);
}

}  // namespace arz
