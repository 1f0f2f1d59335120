#include "test_support.hpp"

#include <sglight/app.hpp>
#include <sglight/validation.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sglight;
namespace fs = std::filesystem;

namespace {

const fs::path kScenarios = SGLIGHT_SCENARIO_DIR;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sglight_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

RunOptions fast() {
  RunOptions o;
  o.dt = 1e-2;
  o.grid_n = 1024;
  return o;
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

using RunCommand = TempDir;

TEST_F(RunCommand, WritesAllArtifacts) {
  const auto rep = cmd_run(kScenarios / "magnetic_symmetric.conf", dir_, fast());
  for (const auto& a : rep.artifacts) EXPECT_TRUE(fs::exists(a)) << a;
  auto sorted = rep.artifacts;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  EXPECT_EQ(rep.snapshots.size(), 3u);  // t = 0, 1 and the exit at t = 2
  EXPECT_EQ(first_line(dir_ / "trajectory.csv"), "t,center1,center2,width1,width2,norm1,norm2");
  for (const char* name : {"snap_t0.csv", "snap_t1.csv", "snap_t2.csv"}) {
    ASSERT_TRUE(fs::exists(dir_ / name)) << name;
    EXPECT_EQ(first_line(dir_ / name), "x,re_e1,im_e1,re_e2,im_e2,abs2_e1,abs2_e2");
  }
  const auto report = read_text_file(dir_ / "report.txt");
  EXPECT_NE(report.find("verdict = category=Symmetric"), std::string::npos);
  EXPECT_NE(report.find("max_center_discrepancy = "), std::string::npos);
  for (const auto& e : fs::directory_iterator(dir_)) EXPECT_NE(e.path().extension(), ".tmp");
}

TEST_F(RunCommand, SymmetricSplitAgreesWithClosedForm) {
  const auto rep = cmd_run(kScenarios / "magnetic_symmetric.conf", dir_);
  EXPECT_EQ(rep.verdict.category, SplitCategory::Symmetric);
  EXPECT_LT(rep.max_center_discrepancy, 1e-6);
  EXPECT_NEAR(rep.exit_centers_analytic[0], -0.02, 1e-15);
  EXPECT_NEAR(rep.exit_centers_analytic[1], 0.02, 1e-15);
  EXPECT_NEAR(rep.norms[0], 1.0, 1e-10);
  EXPECT_NEAR(rep.norms[1], 1.0, 1e-10);
}

TEST_F(RunCommand, UniformFieldsDoNotDeflect) {
  const auto rep = cmd_run(kScenarios / "uniform.conf", dir_, fast());
  EXPECT_EQ(rep.verdict.category, SplitCategory::NoDeflection);
  EXPECT_EQ(rep.exit_centers_analytic, (std::array<double, 2>{0, 0}));
  EXPECT_NEAR(rep.exit_centers_numeric[0], 0.0, 1e-12);
  EXPECT_NEAR(rep.exit_centers_numeric[1], 0.0, 1e-12);
}

TEST_F(RunCommand, ZeroGradientOverrideMatchesUniform) {
  auto opt = fast();
  opt.overrides = {{"b1", "0"}};
  const auto rep = cmd_run(kScenarios / "magnetic_symmetric.conf", dir_, opt);
  const auto uni = cmd_run(kScenarios / "uniform.conf", dir_ / "u", fast());
  EXPECT_EQ(rep.verdict, uni.verdict);
  EXPECT_EQ(rep.exit_centers_analytic, uni.exit_centers_analytic);
  EXPECT_NEAR(rep.exit_centers_numeric[0], uni.exit_centers_numeric[0], 1e-12);
  EXPECT_NEAR(rep.exit_centers_numeric[1], uni.exit_centers_numeric[1], 1e-12);
}

TEST_F(RunCommand, ConfigErrorWritesNothing) {
  auto opt = fast();
  opt.overrides = {{"probe_b", "-1"}};
  EXPECT_THROW(cmd_run(kScenarios / "magnetic_symmetric.conf", dir_, opt), ConfigError);
  EXPECT_FALSE(fs::exists(dir_));
}

TEST_F(RunCommand, GuardFailureWritesNothing) {
  auto opt = fast();
  opt.overrides = {{"b1", "20"}};
  opt.grid_halfwidth = 8.0;
  EXPECT_THROW(cmd_run(kScenarios / "magnetic_symmetric.conf", dir_, opt), GuardFailure);
  EXPECT_FALSE(fs::exists(dir_));
}

TEST(Simulate, Deterministic) {
  const auto s = load_scenario(read_text_file(kScenarios / "magnetic_asymmetric.conf"));
  const auto a = simulate(s, fast());
  const auto b = simulate(s, fast());
  EXPECT_EQ(a.exit_centers_numeric, b.exit_centers_numeric);
  ASSERT_EQ(a.snapshots.size(), b.snapshots.size());
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) EXPECT_EQ(a.snapshots[i].e1, b.snapshots[i].e1);
  EXPECT_EQ(a.verdict.category, SplitCategory::OppositeDirection);
  EXPECT_EQ(*a.verdict.condition_label, 'e');
}

using SweepCommand = TempDir;

TEST_F(SweepCommand, MagneticCentersLinearInGradient) {
  const auto text = read_text_file(kScenarios / "magnetic_symmetric.conf");
  const auto rows = sweep(text, "b1", {0.0, 0.05, 0.1}, fast());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].analytic, (std::array<double, 2>{0, 0}));
  for (int j = 0; j < 2; ++j) {
    EXPECT_NEAR(rows[2].analytic[j], 2.0 * rows[1].analytic[j], 1e-15);
    EXPECT_NEAR(rows[2].numeric[j], 2.0 * rows[1].numeric[j], 1e-6);
  }
  EXPECT_EQ(rows[0].verdict.category, SplitCategory::NoDeflection);
  EXPECT_EQ(rows[1].verdict.category, SplitCategory::Symmetric);
}

TEST_F(SweepCommand, OpticalCentersOddInEntryPoint) {
  const auto text = read_text_file(kScenarios / "optical_gaussian.conf");
  const auto rows = sweep(text, "probe_a", {-4.0, 4.0}, fast());
  for (int j = 0; j < 2; ++j) {
    EXPECT_NEAR(rows[0].analytic[j], -rows[1].analytic[j], 1e-14);
    EXPECT_NEAR(rows[0].numeric[j], -rows[1].numeric[j], 1e-8);
  }
}

TEST_F(SweepCommand, WritesCsvAndRejectsBadKeys) {
  const auto csv = dir_ / "sweep.csv";
  cmd_sweep(kScenarios / "magnetic_symmetric.conf", "b1", {}, csv, fast());
  EXPECT_EQ(read_text_file(csv), "value,x1_analytic,x2_analytic,x1_numeric,x2_numeric,verdict\n");
  EXPECT_THROW(cmd_sweep(kScenarios / "magnetic_symmetric.conf", "mu", {1.0}, csv, fast()), BadSweepKey);
  EXPECT_THROW(cmd_sweep(kScenarios / "magnetic_symmetric.conf", "nonsense", {1.0}, csv, fast()), BadSweepKey);
}

TEST(Dumps, HeadersAndShapes) {
  const auto s = load_scenario(read_text_file(kScenarios / "magnetic_symmetric.conf"));
  const auto analytic = analytic_csv(s, 4);
  EXPECT_EQ(analytic.substr(0, analytic.find('\n')), "t,center_1,center_2,width_1,width_2,peak_1,peak_2");
  EXPECT_EQ(std::count(analytic.begin(), analytic.end(), '\n'), 6);
  const auto response = response_csv(s, {0.0, 1.0});
  EXPECT_EQ(response.substr(0, response.find('\n')), "delta_j,delta_c,re_steady,im_steady,re_ode,im_ode,abs_err");
  EXPECT_EQ(std::count(response.begin(), response.end(), '\n'), 5);
  const auto pol = polariton_text(s);
  EXPECT_NE(pol.find("alpha_1 = -0.02\n"), std::string::npos);
  EXPECT_NE(pol.find("v_group = 0.5\n"), std::string::npos);
}

TEST(Validate, AllSuitesPass) {
  for (const char* suite : {"response", "linear", "optical", "polariton"}) {
    std::ostringstream os;
    EXPECT_EQ(cmd_validate(suite, os), 0) << os.str();
    EXPECT_NE(os.str().find("ALL PASS"), std::string::npos);
  }
  std::ostringstream os;
  EXPECT_THROW(cmd_validate("bogus", os), Error);
}
