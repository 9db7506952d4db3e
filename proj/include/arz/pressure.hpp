#pragma once

// Velocity-offset laws p(rho) for the Aw-Rascle-Zhang system.
//
//   VO1  p(rho) = eps * (rho_star rho / (rho_star - rho))^gamma,  0 <= rho < rho_star
//   VO2  VO1 up to rho_tr = rho_star - eps, C2 quadratic continuation beyond
//   VO3  p(rho) = v_ref * (rho / rho_star)^gamma
//
// A law may additionally be truncated at a density rho_num: beyond it the
// law is replaced by its second-order Taylor polynomial at rho_num. The
// truncated law is the explicit part p_exp of a SplitLaw.

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "arz/errors.hpp"
#include "arz/root.hpp"

namespace arz {

enum class OffsetKind { VO1, VO2, VO3 };

inline const char* to_string(OffsetKind kind) {
  switch (kind) {
    case OffsetKind::VO1: return "vo1";
    case OffsetKind::VO2: return "vo2";
    case OffsetKind::VO3: return "vo3";
  }
  return "?";
}

/// Densities below this fraction of rho_star are treated as vacuum.
inline constexpr double kVacuumFraction = 1e-12;

template <typename Scalar>
class PressureLaw {
 public:
  static PressureLaw vo1(Scalar epsilon, Scalar gamma, Scalar rho_star = 1) {
    PressureLaw law(OffsetKind::VO1, epsilon, gamma, rho_star, 1);
    law.validate();
    return law;
  }

  static PressureLaw vo2(Scalar epsilon, Scalar gamma, Scalar rho_star = 1) {
    PressureLaw law(OffsetKind::VO2, epsilon, gamma, rho_star, 1);
    law.validate();
    if (!(epsilon < rho_star)) {
      throw ParameterError("vo2 needs epsilon < rho_star (rho_tr = rho_star - epsilon)");
    }
    law.rho_tr_ = rho_star - epsilon;
    law.c0_ = law.singular_value(law.rho_tr_);
    law.c1_ = law.singular_derivative(law.rho_tr_);
    law.c2_ = law.singular_second_derivative(law.rho_tr_);
    return law;
  }

  static PressureLaw vo3(Scalar gamma, Scalar rho_star = 1, Scalar v_ref = 1) {
    PressureLaw law(OffsetKind::VO3, 1, gamma, rho_star, v_ref);
    law.validate();
    return law;
  }

  OffsetKind kind() const { return kind_; }
  Scalar epsilon() const { return epsilon_; }
  Scalar gamma() const { return gamma_; }
  Scalar rho_star() const { return rho_star_; }
  Scalar v_ref() const { return v_ref_; }
  /// Transition density of VO2 (rho_star for the other kinds).
  Scalar rho_tr() const { return kind_ == OffsetKind::VO2 ? rho_tr_ : rho_star_; }
  Scalar c0() const { return c0_; }
  Scalar c1() const { return c1_; }
  Scalar c2() const { return c2_; }
  std::optional<Scalar> truncation() const { return truncation_; }
  Scalar vacuum_density() const { return Scalar(kVacuumFraction) * rho_star_; }

  /// Supremum of the domain: rho_star for an untruncated VO1 law, +inf otherwise.
  Scalar upper_density() const {
    if (kind_ == OffsetKind::VO1 && !truncation_) return rho_star_;
    return std::numeric_limits<Scalar>::infinity();
  }

  bool in_domain(Scalar rho) const { return rho >= 0 && rho < upper_density(); }

  Scalar value(Scalar rho) const {
    check_domain(rho);
    if (truncation_ && rho > *truncation_) {
      const Scalar d = rho - *truncation_;
      return t0_ + t1_ * d + t2_ * d * d / 2;
    }
    return base_value(rho);
  }

  Scalar derivative(Scalar rho) const {
    check_domain(rho);
    if (truncation_ && rho > *truncation_) return t1_ + t2_ * (rho - *truncation_);
    return base_derivative(rho);
  }

  Scalar second_derivative(Scalar rho) const {
    check_domain(rho);
    if (truncation_ && rho > *truncation_) return t2_;
    return base_second_derivative(rho);
  }

  /// Solves p(rho) = w. Closed-form start, polished by safeguarded Newton on
  /// the bracket (0, upper).
  Scalar inverse(Scalar w, int max_iter = 100) const {
    using std::abs;
    if (!(w >= 0)) throw DomainError("velocity offset inverse needs w >= 0");
    if (w == 0) return 0;
    const Scalar guess = closed_form_inverse(w);
    Scalar hi = upper_density();
    if (!std::isfinite(static_cast<double>(hi))) {
      hi = std::max(Scalar(2) * guess, rho_star_);
      while (value(hi) < w) hi *= 2;
    }
    RootOptions<Scalar> opts;
    opts.abs_tol = Scalar(1e-13) * std::max(Scalar(1), w);
    opts.max_iter = max_iter;
    return safeguarded_newton<Scalar>(
        [&](Scalar rho) {
          return std::pair<Scalar, Scalar>{value(rho) - w, derivative(rho)};
        },
        Scalar(0), hi, guess, opts);
  }

  /// The law with its second-order Taylor continuation beyond rho_num.
  PressureLaw truncated(Scalar rho_num) const {
    if (!(rho_num > 0 && rho_num < rho_star_)) {
      throw ParameterError("rho_num must satisfy 0 < rho_num < rho_star");
    }
    if (kind_ == OffsetKind::VO2 && !(rho_num < rho_tr_)) {
      throw ParameterError("vo2 needs rho_num < rho_tr");
    }
    PressureLaw out = *this;
    out.truncation_ = std::nullopt;
    out.t0_ = out.base_value(rho_num);
    out.t1_ = out.base_derivative(rho_num);
    out.t2_ = out.base_second_derivative(rho_num);
    out.truncation_ = rho_num;
    return out;
  }

  PressureLaw untruncated() const {
    PressureLaw out = *this;
    out.truncation_ = std::nullopt;
    return out;
  }

 private:
  PressureLaw(OffsetKind kind, Scalar epsilon, Scalar gamma, Scalar rho_star,
              Scalar v_ref)
      : kind_(kind), epsilon_(epsilon), gamma_(gamma), rho_star_(rho_star),
        v_ref_(v_ref) {}

  void validate() const {
    if (!(epsilon_ > 0)) throw ParameterError("epsilon must be positive");
    if (!(gamma_ >= 1)) throw ParameterError("gamma must be >= 1");
    if (!(rho_star_ > 0)) throw ParameterError("rho_star must be positive");
    if (!(v_ref_ > 0)) throw ParameterError("v_ref must be positive");
  }

  void check_domain(Scalar rho) const {
    if (!(rho >= 0) || !(rho < upper_density())) {
      throw DomainError("density " + format_number(static_cast<double>(rho)) +
                        " outside the domain of the " + to_string(kind_) + " law");
    }
  }

  // VO1 pieces, written through q = rho_star rho / (rho_star - rho).
  Scalar singular_value(Scalar rho) const {
    using std::pow;
    const Scalar q = rho_star_ * rho / (rho_star_ - rho);
    return epsilon_ * pow(q, gamma_);
  }
  Scalar singular_derivative(Scalar rho) const {
    using std::pow;
    const Scalar gap = rho_star_ - rho;
    const Scalar q = rho_star_ * rho / gap;
    const Scalar dq = rho_star_ * rho_star_ / (gap * gap);
    return epsilon_ * gamma_ * pow(q, gamma_ - 1) * dq;
  }
  Scalar singular_second_derivative(Scalar rho) const {
    using std::pow;
    const Scalar gap = rho_star_ - rho;
    const Scalar q = rho_star_ * rho / gap;
    const Scalar dq = rho_star_ * rho_star_ / (gap * gap);
    const Scalar ddq = 2 * dq / gap;
    // (gamma - 1) q^(gamma - 2) is 0 for gamma = 1 even at q = 0.
    const Scalar curvature =
        gamma_ == 1 ? Scalar(0) : (gamma_ - 1) * pow(q, gamma_ - 2) * dq * dq;
    return epsilon_ * gamma_ * (curvature + pow(q, gamma_ - 1) * ddq);
  }

  Scalar base_value(Scalar rho) const {
    using std::pow;
    switch (kind_) {
      case OffsetKind::VO1:
        return singular_value(rho);
      case OffsetKind::VO2: {
        if (rho <= rho_tr_) return singular_value(rho);
        const Scalar d = rho - rho_tr_;
        return c0_ + c1_ * d + c2_ * d * d / 2;
      }
      case OffsetKind::VO3:
        return v_ref_ * pow(rho / rho_star_, gamma_);
    }
    return 0;
  }

  Scalar base_derivative(Scalar rho) const {
    using std::pow;
    switch (kind_) {
      case OffsetKind::VO1:
        return singular_derivative(rho);
      case OffsetKind::VO2:
        if (rho <= rho_tr_) return singular_derivative(rho);
        return c1_ + c2_ * (rho - rho_tr_);
      case OffsetKind::VO3:
        return v_ref_ * gamma_ / rho_star_ * pow(rho / rho_star_, gamma_ - 1);
    }
    return 0;
  }

  Scalar base_second_derivative(Scalar rho) const {
    using std::pow;
    switch (kind_) {
      case OffsetKind::VO1:
        return singular_second_derivative(rho);
      case OffsetKind::VO2:
        if (rho <= rho_tr_) return singular_second_derivative(rho);
        return c2_;
      case OffsetKind::VO3:
        if (gamma_ == 1) return 0;
        return v_ref_ * gamma_ * (gamma_ - 1) / (rho_star_ * rho_star_) *
               pow(rho / rho_star_, gamma_ - 2);
    }
    return 0;
  }

  static Scalar quadratic_offset(Scalar a0, Scalar a1, Scalar a2, Scalar w) {
    using std::sqrt;
    // Positive root of a0 + a1 d + a2 d^2 / 2 = w, cancellation-free form.
    const Scalar r = w - a0;
    return 2 * r / (a1 + sqrt(a1 * a1 + 2 * a2 * r));
  }

  Scalar closed_form_inverse(Scalar w) const {
    using std::pow;
    if (truncation_ && w > t0_) return *truncation_ + quadratic_offset(t0_, t1_, t2_, w);
    switch (kind_) {
      case OffsetKind::VO2:
        if (w > c0_) return rho_tr_ + quadratic_offset(c0_, c1_, c2_, w);
        [[fallthrough]];
      case OffsetKind::VO1: {
        const Scalar q = pow(w / epsilon_, 1 / gamma_);
        return rho_star_ * q / (rho_star_ + q);
      }
      case OffsetKind::VO3:
        return rho_star_ * pow(w / v_ref_, 1 / gamma_);
    }
    return 0;
  }

  OffsetKind kind_;
  Scalar epsilon_;
  Scalar gamma_;
  Scalar rho_star_;
  Scalar v_ref_;
  Scalar rho_tr_ = 0;
  Scalar c0_ = 0, c1_ = 0, c2_ = 0;
  std::optional<Scalar> truncation_;
  Scalar t0_ = 0, t1_ = 0, t2_ = 0;
};

/// p = p_exp + p_imp with p_exp the law truncated at rho_num.
template <typename Scalar>
class SplitLaw {
 public:
  SplitLaw(const PressureLaw<Scalar>& full, Scalar rho_num)
      : full_(full), explicit_(full), rho_num_(rho_num) {
    full_ = full.untruncated();
    explicit_ = full_.truncated(rho_num);
  }

  const PressureLaw<Scalar>& full() const { return full_; }
  const PressureLaw<Scalar>& explicit_part() const { return explicit_; }
  Scalar rho_num() const { return rho_num_; }

  Scalar p_exp(Scalar rho) const { return explicit_.value(rho); }

  /// Exactly zero up to rho_num.
  Scalar p_imp(Scalar rho) const {
    if (rho <= rho_num_) return 0;
    return full_.value(rho) - explicit_.value(rho);
  }

  Scalar p_imp_derivative(Scalar rho) const {
    if (rho <= rho_num_) return 0;
    return full_.derivative(rho) - explicit_.derivative(rho);
  }

 private:
  PressureLaw<Scalar> full_;
  PressureLaw<Scalar> explicit_;
  Scalar rho_num_;
};

using PressureLawd = PressureLaw<double>;
using SplitLawd = SplitLaw<double>;

// Free-function surface. The array overloads evaluate element-wise and
// accept any Eigen array expression.

template <typename Scalar>
Scalar eval(const PressureLaw<Scalar>& law, Scalar rho) { return law.value(rho); }

template <typename Scalar>
Scalar deriv(const PressureLaw<Scalar>& law, Scalar rho) { return law.derivative(rho); }

template <typename Scalar>
Scalar deriv2(const PressureLaw<Scalar>& law, Scalar rho) {
  return law.second_derivative(rho);
}

template <typename Scalar>
Scalar invert(const PressureLaw<Scalar>& law, Scalar w) { return law.inverse(w); }

template <typename Derived>
auto eval(const PressureLaw<typename Derived::Scalar>& law,
          const Eigen::ArrayBase<Derived>& rho) {
  using S = typename Derived::Scalar;
  return rho.derived().unaryExpr([law](S r) { return law.value(r); }).eval();
}

template <typename Derived>
auto deriv(const PressureLaw<typename Derived::Scalar>& law,
           const Eigen::ArrayBase<Derived>& rho) {
  using S = typename Derived::Scalar;
  return rho.derived().unaryExpr([law](S r) { return law.derivative(r); }).eval();
}

template <typename Scalar>
SplitLaw<Scalar> split(const PressureLaw<Scalar>& law, Scalar rho_num) {
  return SplitLaw<Scalar>(law, rho_num);
}

struct RhoNumOptions {
  /// Prefactor c in rho_num = rho_star (1 - c eps^(1/(gamma+1))) for VO1/VO2.
  double prefactor = 0.2;
  /// Exponent alpha in rho_num = rho_star (1 - gamma^(-alpha)) for VO3.
  double alpha = 0.5;
  /// When set, VO3 uses rho_num = rho_star (1 - vo3_delta) instead.
  std::optional<double> vo3_delta;
};

template <typename Scalar>
Scalar default_rho_num(const PressureLaw<Scalar>& law, const RhoNumOptions& opts = {}) {
  using std::pow;
  const Scalar rs = law.rho_star();
  switch (law.kind()) {
    case OffsetKind::VO1:
    case OffsetKind::VO2:
      return rs * (1 - Scalar(opts.prefactor) * pow(law.epsilon(), 1 / (law.gamma() + 1)));
    case OffsetKind::VO3:
      if (opts.vo3_delta) return rs * (1 - Scalar(*opts.vo3_delta));
      return rs * (1 - pow(law.gamma(), -Scalar(opts.alpha)));
  }
  return rs;
}

}  // namespace arz
