#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace arz {

/// Shortest round-trip form of a number for error messages.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Density outside the domain of a velocity-offset law (e.g. rho >= rho_star
/// for the singular law). Usually means the scheme produced an inadmissible
/// state.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar root solve ran out of iterations. `cell()` is -1 when the solve
/// is not tied to a mesh cell.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what, long cell = -1)
      : std::runtime_error(what), cell_(cell) {}
  long cell() const noexcept { return cell_; }

 private:
  long cell_;
};

/// y / rho - p(rho) came out clearly negative: the update left the invariant
/// region.
class NegativeVelocityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimestepUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wraps any solver failure with the simulation time and step index.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arz
