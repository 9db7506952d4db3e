#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "arz/pressure.hpp"

using arz::PressureLawd;
using doctest::Approx;

namespace {

std::vector<PressureLawd> sample_laws() {
  return {PressureLawd::vo1(1e-3, 2), PressureLawd::vo2(1e-3, 2), PressureLawd::vo3(4),
          PressureLawd::vo1(1e-5, 3), PressureLawd::vo2(1e-7, 2), PressureLawd::vo3(500),
          PressureLawd::vo1(1e-3, 1), PressureLawd::vo3(64, 1, 1)};
}

// Long double evaluation written out independently of the library.
long double vo1_ld(long double eps, long double gamma, long double rho) {
  return eps * std::pow(rho / (1.0L - rho), gamma);
}

// Richardson-extrapolated one-sided second differences (error O(k^2)).
double left_second_difference(const PressureLawd& law, double r, double k) {
  auto d = [&](double h) {
    return (law.value(r) - 2 * law.value(r - h) + law.value(r - 2 * h)) / (h * h);
  };
  return 2 * d(k) - d(2 * k);
}

double right_second_difference(const PressureLawd& law, double r, double k) {
  auto d = [&](double h) {
    return (law.value(r + 2 * h) - 2 * law.value(r + h) + law.value(r)) / (h * h);
  };
  return 2 * d(k) - d(2 * k);
}

}  // namespace

TEST_CASE("value at reference points") {
  const auto vo1 = PressureLawd::vo1(1e-3, 2);
  CHECK(vo1.value(0.0) == 0.0);
  CHECK(vo1.value(0.5) == Approx(1e-3).epsilon(1e-14));

  const auto vo3 = PressureLawd::vo3(4);
  const long double oracle = 0.95L * 0.95L * 0.95L * 0.95L;
  CHECK(vo3.value(0.95) == Approx(0.81450625).epsilon(1e-15));
  CHECK(std::abs(vo3.value(0.95) - static_cast<double>(oracle)) < 1e-15);

  const auto vo2 = PressureLawd::vo2(1e-3, 2);
  const double rho_tr = 1 - 1e-3;
  CHECK(vo2.rho_tr() == rho_tr);
  CHECK(vo2.c0() == Approx(998.001).epsilon(1e-9));
  CHECK(vo2.value(rho_tr) == Approx(static_cast<double>(vo1_ld(1e-3L, 2, rho_tr))).epsilon(1e-12));
}

TEST_CASE("vo1 matches a long double evaluation") {
  for (double g : {1.0, 2.0, 3.0}) {
    const auto law = PressureLawd::vo1(1e-5, g);
    for (double rho = 0.01; rho < 0.999; rho += 0.0371) {
      CHECK(law.value(rho) == Approx(static_cast<double>(vo1_ld(1e-5L, g, rho))).epsilon(1e-13));
    }
  }
}

TEST_CASE("derivatives match central differences") {
  for (const auto& law : sample_laws()) {
    for (double rho : {0.1, 0.3, 0.5, 0.7, 0.9, 0.95}) {
      if (law.value(rho) < 1e-200) continue;
      const double h = 1e-7 * law.rho_star();
      const double fd = (law.value(rho + h) - law.value(rho - h)) / (2 * h);
      CHECK(law.derivative(rho) == Approx(fd).epsilon(1e-5));
      const double fd2 = (law.derivative(rho + h) - law.derivative(rho - h)) / (2 * h);
      CHECK(law.second_derivative(rho) == Approx(fd2).epsilon(1e-5));
    }
  }
  CHECK(PressureLawd::vo3(4).derivative(1.0) == Approx(4.0).epsilon(1e-15));
}

TEST_CASE("vo2 is C2 at the transition density") {
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    const auto law = PressureLawd::vo2(eps, 2);
    const double r = law.rho_tr();
    // Analytic one-sided limits.
    const double h = 1e-6 * eps;
    CHECK(law.derivative(r - h) == Approx(law.c1()).epsilon(1e-4));
    CHECK(law.derivative(r + h) == Approx(law.c1()).epsilon(1e-4));
    CHECK(law.second_derivative(r - h) == Approx(law.c2()).epsilon(1e-4));
    CHECK(law.second_derivative(r + h) == Approx(law.c2()).epsilon(1e-4));
    // One-sided second differences of the values.
    const double k = 1e-3 * eps;
    CHECK(left_second_difference(law, r, k) ==
          Approx(right_second_difference(law, r, k)).epsilon(1e-4));
  }
}

TEST_CASE("truncated law is C2 at rho_num") {
  for (const auto& law : sample_laws()) {
    const double rho_num = arz::default_rho_num(law);
    const auto split = arz::split(law, rho_num);
    const auto& pe = split.explicit_part();
    CHECK(pe.value(rho_num) == law.value(rho_num));
    CHECK(pe.derivative(rho_num) == law.derivative(rho_num));
    const double k = 1e-3 * (law.rho_star() - rho_num);
    const double left = left_second_difference(pe, rho_num, k);
    if (std::abs(left) > 1e-200) {
      CHECK(left == Approx(right_second_difference(pe, rho_num, k)).epsilon(1e-4));
    }
  }
}

TEST_CASE("inverse") {
  const auto vo1 = PressureLawd::vo1(1e-3, 2);
  CHECK(vo1.inverse(0.0) == 0.0);
  CHECK(arz::invert(vo1, 1e-3) == Approx(0.5).epsilon(1e-13));
  CHECK(arz::invert(PressureLawd::vo3(4), 1.0) == Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(vo1.inverse(-1.0), arz::DomainError);
}

TEST_CASE("inverse round trip on a log grid") {
  for (const auto& law : sample_laws()) {
    for (double rho = 1e-6; rho < 0.999; rho *= 1.07) {
      const double w = law.value(rho);
      if (w < 1e-290) continue;  // underflows for large exponents
      CHECK(law.inverse(w) == Approx(rho).epsilon(1e-10));
    }
  }
}

TEST_CASE("inverse of truncated laws beyond rho_num") {
  const auto law = PressureLawd::vo1(1e-5, 2).truncated(0.99);
  for (double rho : {0.995, 1.0, 1.2, 3.0}) {
    CHECK(law.inverse(law.value(rho)) == Approx(rho).epsilon(1e-10));
  }
}

TEST_CASE("split") {
  const auto law = PressureLawd::vo3(4);
  const auto s = arz::split(law, 0.99);
  for (double rho : {0.0, 0.3, 0.9, 0.99}) {
    CHECK(s.p_imp(rho) == 0.0);
    CHECK(s.p_exp(rho) == law.value(rho));
  }
  const double r = 0.99;
  const double expected = std::pow(r, 4) + 4 * std::pow(r, 3) * 0.01 + 12 * r * r * 0.00005;
  CHECK(s.p_exp(1.0) == Approx(expected).epsilon(1e-14));
  CHECK(s.p_exp(1.0) + s.p_imp(1.0) == Approx(law.value(1.0)).epsilon(1e-15));
  CHECK(s.p_imp(1.0) > 0);

  CHECK_THROWS_AS(arz::split(PressureLawd::vo1(1e-3, 2), 1.0), arz::ParameterError);
  CHECK_THROWS_AS(arz::split(PressureLawd::vo2(1e-3, 2), 0.9995), arz::ParameterError);
}

TEST_CASE("default rho_num") {
  CHECK(arz::default_rho_num(PressureLawd::vo1(1e-3, 2)) == Approx(0.98).epsilon(1e-14));
  arz::RhoNumOptions o;
  o.vo3_delta = 1e-2;
  CHECK(arz::default_rho_num(PressureLawd::vo3(4), o) == Approx(0.99).epsilon(1e-15));
  CHECK(arz::default_rho_num(PressureLawd::vo3(100)) == Approx(0.9).epsilon(1e-14));
  double prev = 0;
  for (double eps = 1e-2; eps > 1e-12; eps /= 10) {
    const double r = arz::default_rho_num(PressureLawd::vo2(eps, 2));
    CHECK(r > prev);
    CHECK(r < 1);
    prev = r;
  }
}

TEST_CASE("monotone in density") {
  for (const auto& law : sample_laws()) {
    double prev = -1;
    for (double rho = 0; rho < 0.9999; rho += 1e-4) {
      const double p = law.value(rho);
      CHECK_MESSAGE(p >= prev, to_string(law.kind()) << " at " << rho);
      prev = p;
    }
  }
}

TEST_CASE("implicit part blows up along the ladders") {
  // At a fixed density below rho_star both VO1 and VO2 vanish as eps -> 0;
  // the stiffness sits at rho_star itself.
  double prev = 0;
  for (double eps : {1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
    const auto law = PressureLawd::vo2(eps, 2);
    const auto s = arz::split(law, arz::default_rho_num(law));
    const double p = s.p_imp(1.0);
    CHECK(p > prev);
    prev = p;
  }
  // VO3 vanishes below rho_star as gamma grows; it blows up above it.
  prev = 0;
  for (double g : {4.0, 50.0, 100.0, 200.0, 500.0}) {
    const auto law = PressureLawd::vo3(g);
    const auto s = arz::split(law, arz::default_rho_num(law));
    const double p = s.p_imp(1.01);
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("explicit speed stays bounded along the ladders") {
  auto max_speed = [](const PressureLawd& law) {
    const auto s = arz::split(law, arz::default_rho_num(law));
    double m = 0;
    for (double rho = 0; rho <= 1.0; rho += 1e-5) {
      m = std::max(m, rho * s.explicit_part().derivative(rho));
    }
    return m;
  };
  for (double eps : {1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
    CHECK(max_speed(PressureLawd::vo1(eps, 2)) < 2000);
    CHECK(max_speed(PressureLawd::vo2(eps, 2)) < 2000);
  }
  for (double g : {4.0, 50.0, 100.0, 200.0, 500.0}) CHECK(max_speed(PressureLawd::vo3(g)) < 2000);
  // Without the split the same quantity diverges.
  CHECK(PressureLawd::vo2(1e-7, 2).derivative(1 - 1e-7) > 1e10);
}

TEST_CASE("array overloads") {
  const auto law = PressureLawd::vo1(1e-3, 2);
  Eigen::ArrayXd rho(3);
  rho << 0.0, 0.5, 0.9;
  const Eigen::ArrayXd p = arz::eval(law, rho);
  const Eigen::ArrayXd dp = arz::deriv(law, rho);
  for (int i = 0; i < 3; ++i) {
    CHECK(p[i] == law.value(rho[i]));
    CHECK(dp[i] == law.derivative(rho[i]));
  }
}

TEST_CASE("domain and parameter checks") {
  const auto vo1 = PressureLawd::vo1(1e-3, 2);
  CHECK_THROWS_AS(vo1.value(1.0), arz::DomainError);
  CHECK_THROWS_AS(vo1.value(-0.1), arz::DomainError);
  CHECK_NOTHROW(PressureLawd::vo3(4).value(1.5));
  CHECK_THROWS_AS(PressureLawd::vo1(0, 2), arz::ParameterError);
  CHECK_THROWS_AS(PressureLawd::vo3(0.5), arz::ParameterError);
  CHECK_THROWS_AS(PressureLawd::vo2(2, 2), arz::ParameterError);
}
