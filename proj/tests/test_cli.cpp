#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "saiqh/data_io.hpp"
#include "support/fixtures.hpp"

namespace saiqh {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SAIQH_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::path(::testing::TempDir()) / (std::string("saiqh_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  const std::string config_ = testing::kPortugalConfig;
};

TEST_F(Cli, SimulateWritesFullTrajectory) {
  const RunResult r = run("simulate --config " + config_ + " --scheme nsfd --out " + path("t.csv"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("R0         0.954"), std::string::npos) << r.output;
  const Trajectory traj = read_trajectory(path("t.csv"));
  EXPECT_EQ(traj.states.size(), 2001u);
  EXPECT_EQ(traj.scheme, Scheme::nsfd);
}

TEST_F(Cli, SimulateIsDeterministic) {
  const std::string base = "simulate --config " + config_ + " --h 0.5 --steps 300 --out ";
  ASSERT_EQ(run(base + path("a.csv")).exit_code, 0);
  ASSERT_EQ(run(base + path("b.csv")).exit_code, 0);
  const std::string a = slurp(path("a.csv"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(path("b.csv")));
  EXPECT_EQ(read_trajectory(path("a.csv")).states.size(), 301u);
}

TEST_F(Cli, SimulateRk4) {
  const RunResult r = run("simulate --config " + config_ + " --scheme rk4 --h 0.01 --steps 100 --out " +
                          path("r.csv"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const Trajectory traj = read_trajectory(path("r.csv"));
  EXPECT_EQ(traj.scheme, Scheme::rk4);
  EXPECT_EQ(traj.h, 0.01);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("simulate --config " + config_ + " --h -1 --out " + path("t.csv")).exit_code, 1);
  EXPECT_EQ(run("simulate --config " + config_ + " --h 0 --out " + path("t.csv")).exit_code, 1);
  EXPECT_EQ(run("simulate --config " + config_ + " --scheme euler --out " + path("t.csv")).exit_code, 1);
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("simulate --config " + config_ + " --set gamma=1 --out " + path("t.csv")).exit_code, 1);
  EXPECT_EQ(run("simulate --config " + config_ + " --set f2=0.99 --out " + path("t.csv")).exit_code, 1);
  EXPECT_FALSE(fs::exists(path("t.csv")));
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(Cli, IoErrors) {
  EXPECT_EQ(run("simulate --config " + path("missing.cfg") + " --out " + path("t.csv")).exit_code, 3);
  EXPECT_EQ(run("simulate --config " + config_ + " --steps 5 --out " + path("no/dir/t.csv")).exit_code, 3);
}

TEST_F(Cli, AnalyzePortugal) {
  const RunResult r = run("analyze --config " + config_);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("classification      dfe_globally_stable"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("EE                  none: R0 <= 1"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("(subcritical)"), std::string::npos) << r.output;
}

TEST_F(Cli, AnalyzeEndemicOverride) {
  const RunResult r = run("analyze --config " + config_ + " --set beta=3.86");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("classification      endemic_exists"), std::string::npos) << r.output;
  const auto ee = r.output.find("\nEE ");
  ASSERT_NE(ee, std::string::npos) << r.output;
  std::istringstream lines(r.output.substr(ee + 1));
  std::string line;
  std::getline(lines, line);
  int residuals = 0;
  while (std::getline(lines, line) && line.rfind("  residual", 0) == 0) {
    const double value = std::stod(line.substr(line.rfind(' ') + 1));
    EXPECT_LT(value, 1e-9) << line;
    ++residuals;
  }
  EXPECT_EQ(residuals, 3);
}

TEST_F(Cli, AnalyzeFullQuarantine) {
  const RunResult r = run("analyze --config " + config_ + " --set p=1");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("lambda*             undefined"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("EE                  none"), std::string::npos) << r.output;
}

TEST_F(Cli, AnalyzeTrajectoryWritesReport) {
  ASSERT_EQ(run("simulate --config " + config_ + " --out " + path("t.csv")).exit_code, 0);
  const RunResult r = run("analyze --config " + config_ + " --traj " + path("t.csv") + " --report " +
                          path("s.json"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("descent violations  0"), std::string::npos) << r.output;
  const nlohmann::json j = read_json(path("s.json"));
  EXPECT_EQ(j.at("descent_violations"), 0);
  EXPECT_EQ(j.at("lyapunov_series").size(), 2001u);
  EXPECT_EQ(j.at("verified"), true);
}

TEST_F(Cli, CompareWritesFitReport) {
  ASSERT_EQ(run("simulate --config " + config_ + " --steps 70 --out " + path("t.csv")).exit_code, 0);
  const RunResult r = run("compare --traj " + path("t.csv") + " --observed " + testing::kPortugalObserved +
                          " --mapping IHH --out " + path("fit.json"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const FitReport fit = fit_report_from_json(read_json(path("fit.json")));
  EXPECT_EQ(fit.mapping, Mapping::I_plus_H_plus_Hbar);
  EXPECT_EQ(fit.n_points, 64u);
  EXPECT_GE(fit.rmse, fit.mae);
  EXPECT_GE(fit.max_abs_error, fit.rmse);
}

TEST_F(Cli, CompareWithoutOverlapFails) {
  ASSERT_EQ(run("simulate --config " + config_ + " --steps 5 --set t0_date=2022-01-01 --out " +
                path("t.csv"))
                .exit_code,
            0);
  EXPECT_EQ(run("compare --traj " + path("t.csv") + " --observed " + testing::kPortugalObserved +
                " --out " + path("fit.json"))
                .exit_code,
            1);
}

TEST_F(Cli, SweepNsfdHasNoViolations) {
  const RunResult r = run("sweep --config " + config_ + " --h-list 0.1,1,10,100 --out " + path("sw.csv"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  std::istringstream table(slurp(path("sw.csv")));
  std::string line;
  std::getline(table, line);
  EXPECT_EQ(line, "scheme,h,steps,min_component,max_N,capacity,violations");
  int rows = 0;
  while (std::getline(table, line)) {
    ++rows;
    EXPECT_EQ(line.substr(0, 5), "nsfd,");
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "0") << line;
  }
  EXPECT_EQ(rows, 4);
}

TEST_F(Cli, SweepFlagsRk4LeavingTheRegion) {
  const RunResult r = run("sweep --config " + config_ + " --h-list 10 --scheme both --out " + path("sw.csv"));
  EXPECT_EQ(r.exit_code, 2) << r.output;
  std::istringstream table(slurp(path("sw.csv")));
  std::string line;
  std::getline(table, line);
  std::map<std::string, std::string> violations;
  while (std::getline(table, line)) {
    violations[line.substr(0, line.find(','))] = line.substr(line.rfind(',') + 1);
  }
  EXPECT_EQ(violations["nsfd"], "0");
  ASSERT_TRUE(violations.count("rk4"));
  EXPECT_NE(violations["rk4"], "0");
}

TEST_F(Cli, SweepRejectsBadStepList) {
  EXPECT_EQ(run("sweep --config " + config_ + " --h-list 0").exit_code, 1);
  EXPECT_EQ(run("sweep --config " + config_ + " --h-list 1,abc").exit_code, 1);
  EXPECT_EQ(run("sweep --config " + config_ + " --h-list=-1").exit_code, 1);
}

}  // namespace
}  // namespace saiqh
