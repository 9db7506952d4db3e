#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "arz/io.hpp"

using namespace arz;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "arz_test_io";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("csv layout") {
  const auto law = PressureLawd::vo1(1e-3, 2);
  SolutionField f(Grid1D(0, 1, 10));
  for (Eigen::Index i = 0; i < 12; ++i) f.set_state(i, to_conserved({0.5, 1}, law));
  f.set_state(4, {0, 0});
  const auto path = scratch("uniform.csv");
  write_csv(path, f, law);
  const auto rows = lines(path);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "x,rho,v,y");
  double x = 0, rho = 0, v = 0, y = 0;
  REQUIRE(std::sscanf(rows[1].c_str(), "%lf,%lf,%lf,%lf", &x, &rho, &v, &y) == 4);
  CHECK(x == 0.05);
  CHECK(rho == 0.5);
  CHECK(v == doctest::Approx(1).epsilon(1e-14));
  CHECK(y == f.y[1]);
  CHECK(rows[4].find(",nan,") != std::string::npos);
}

TEST_CASE("csv round trip") {
  const auto law = PressureLawd::vo3(4);
  SolutionField f(Grid1D(0, 1, 37));
  for (Eigen::Index i = 0; i < f.rho.size(); ++i) {
    const double rho = 0.9 * std::abs(std::sin(0.37 * static_cast<double>(i)));
    f.set_state(i, to_conserved({rho, 1 + std::cos(static_cast<double>(i))}, law));
  }
  const auto path = scratch("roundtrip.csv");
  write_csv(path, f, law);
  const auto g = read_csv(path, 0.3);
  CHECK(g.n_cells() == 37);
  CHECK(g.time == 0.3);
  CHECK(std::abs(g.grid.dx() - f.grid.dx()) < 1e-15);
  for (Eigen::Index j = 1; j <= 37; ++j) {
    CHECK(g.rho[j] == f.rho[j]);
    CHECK(g.y[j] == f.y[j]);
  }
}

TEST_CASE("io errors name the path") {
  const auto law = PressureLawd::vo3(4);
  SolutionField f(Grid1D(0, 1, 3));
  try {
    write_csv("/nonexistent-dir/x.csv", f, law);
    FAIL("expected an IO error");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/x.csv") != std::string::npos);
  }
  CHECK_THROWS_AS(read_csv("/nonexistent-dir/x.csv"), IoError);
}

TEST_CASE("run outputs") {
  RunConfig cfg;
  cfg.scenario = "AIII";
  cfg.dx = 1e-2;
  const auto result = run(cfg);
  const auto dir = scratch("run");
  fs::remove_all(dir);
  write_run(dir, cfg, result);
  for (const char* name : {"snapshot_0.27.csv", "snapshot_0.53.csv", "snapshot_0.8.csv",
                           "log.csv", "summary.txt", "plot.py"}) {
    CHECK(fs::exists(dir / name));
  }
  const auto log = lines(dir / "log.csv");
  CHECK(log[0] == "step,t,dt");
  CHECK(log.size() == result.log.steps.size() + 1);
  CHECK(read_summary_min_dt(dir / "summary.txt") == result.log.min_dt);
  const auto summary = slurp(dir / "summary.txt");
  CHECK(summary.find("initial_mass=") != std::string::npos);
  CHECK(summary.find("final_mass=") != std::string::npos);
  CHECK(slurp(dir / "plot.py").find("matplotlib") != std::string::npos);

  // Identical configurations give byte-identical files.
  const auto again = scratch("run_again");
  fs::remove_all(again);
  write_run(again, cfg, run(cfg));
  for (const char* name : {"snapshot_0.27.csv", "snapshot_0.8.csv", "log.csv"}) {
    CHECK(slurp(dir / name) == slurp(again / name));
  }
}
