#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cascade/commands.hpp"
#include "cascade/csv.hpp"

using namespace cascade;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cascade_tests" / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ExperimentConfig quick() {
  ExperimentConfig c;
  c.params.n = 15;
  c.params.T = 40;
  c.params.realizations = 3;
  c.threads = 2;
  return c;
}

}  // namespace

TEST_CASE("oracle block") {
  std::ostringstream log, err;
  REQUIRE(cmd_oracle(ExperimentConfig{}, std::nullopt, log, err) == 0);
  const auto text = log.str();
  // 1 / 1.368 = 0.730994..., which rounds to 0.731 at three decimals.
  CHECK(text.find("p_A = 0.730994\n") != std::string::npos);
  CHECK(text.find("p_B = 0.269006\n") != std::string::npos);
  CHECK(text.find("p_p_eff = 0.950000\n") != std::string::npos);
  CHECK(text.find("c_one_step = 1.380000\n") != std::string::npos);
  CHECK(text.find("c_fixed_point = 1.612903\n") != std::string::npos);
  CHECK(text.find("network_effect(2) = 0.500000\n") != std::string::npos);
  CHECK(text.find("network_effect(10) = 0.900000\n") != std::string::npos);
  CHECK(text == oracle_report(ExperimentConfig{}));

  const auto dir = scratch("oracle");
  std::ostringstream quiet;
  REQUIRE(cmd_oracle(ExperimentConfig{}, dir, quiet, err) == 0);
  CHECK(slurp(dir / "oracle.txt") == text);
}

TEST_CASE("run with T = 0 writes a header and the initial row") {
  auto c = quick();
  c.params.T = 0;
  const auto dir = scratch("run_t0");
  std::ostringstream log, err;
  REQUIRE(cmd_run(c, 1, dir, log, err) == 0);
  const auto series = lines(slurp(dir / "series.csv"));
  REQUIRE(series.size() == 2);
  CHECK(series[0] == csv::kSeriesHeader);
  CHECK(series[1].rfind("0,0.000000,1.000000,", 0) == 0);
  CHECK(fs::exists(dir / "snapshot.csv"));
  CHECK(fs::exists(dir / "network.edges"));
}

TEST_CASE("run writes T + 1 rows with fixed-format numbers") {
  const auto dir = scratch("run");
  std::ostringstream log, err;
  REQUIRE(cmd_run(quick(), 5, dir, log, err) == 0);
  const auto series = lines(slurp(dir / "series.csv"));
  CHECK(series.size() == 42);
  const auto snapshot = lines(slurp(dir / "snapshot.csv"));
  CHECK(snapshot.size() == 16);
  CHECK(snapshot[0] == csv::kSnapshotHeader);
  CHECK(lines(slurp(dir / "trajectory.csv"))[0] == csv::kTrajectoryHeader);
  CHECK(lines(slurp(dir / "stationary.csv"))[0] == csv::kStationaryHeader);
}

TEST_CASE("sweep writes one row per axis value") {
  auto c = quick();
  c.params.realizations = 2;
  const auto dir = scratch("sweep");
  std::ostringstream log, err;
  REQUIRE(cmd_sweep(c, 3, dir, log, err) == 0);
  const auto rows = lines(slurp(dir / "sweep.csv"));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "axis_value,fixed_mean_failure,fixed_mean_capital,fixed_mean_fp0,"
                   "fixed_mean_fp1,converged");
  CHECK(rows[1].rfind("0.010000,", 0) == 0);
  CHECK(rows[10].rfind("0.100000,", 0) == 0);
  CHECK(lines(slurp(dir / "sweep_realizations.csv")).size() == 21);
}

TEST_CASE("repeated invocations are byte-identical") {
  const auto c = quick();
  const std::vector<std::string> run_files = {"series.csv", "trajectory.csv", "snapshot.csv",
                                              "stationary.csv", "network.edges"};
  std::ostringstream log, err;
  const auto a = scratch("repeat_a"), b = scratch("repeat_b");
  REQUIRE(cmd_ensemble(c, 17, a, log, err) == 0);
  REQUIRE(cmd_ensemble(c, 17, b, log, err) == 0);
  for (const auto& name : run_files) CHECK(slurp(a / name) == slurp(b / name));
  CHECK(slurp(a / "ensemble_mean.csv") == slurp(b / "ensemble_mean.csv"));
  CHECK(slurp(a / "realizations.csv") == slurp(b / "realizations.csv"));
  const auto other = scratch("repeat_other");
  REQUIRE(cmd_ensemble(c, 18, other, log, err) == 0);
  CHECK(slurp(a / "series.csv") != slurp(other / "series.csv"));
}

TEST_CASE("failures give a nonzero status and a message") {
  const auto blocker = scratch("blocker");
  fs::create_directories(blocker.parent_path());
  std::ofstream(blocker) << "not a directory";
  std::ostringstream log, err;
  CHECK(cmd_run(quick(), 1, blocker / "out", log, err) != 0);
  CHECK(err.str().rfind("error: ", 0) == 0);
  fs::remove(blocker);

  auto bad = quick();
  bad.params.p_l = 2.0;
  std::ostringstream err2;
  CHECK(cmd_run(bad, 1, scratch("bad"), log, err2) != 0);
  CHECK(err2.str().find("p_l") != std::string::npos);
}
