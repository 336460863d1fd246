#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vlab/app/commands.hpp"
#include "vlab/app/config.hpp"
#include "vlab/app/report.hpp"

using namespace vlab::app;
namespace fs = std::filesystem;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string config_error_key(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("vlab_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Config, DefaultsAndOverrides) {
  const auto c = parse("# comment\ngrid.N = 128\nweight.kappa = 0.25  # trailing\nsolver.integrator = etd2\n");
  EXPECT_EQ(c.points, 128);
  EXPECT_EQ(c.kappa, 0.25);
  EXPECT_EQ(c.solver.integrator, vlab::dynamics::Integrator::kETD2);
  EXPECT_EQ(c.dimension, 1);
}

TEST(Config, StrictParsing) {
  EXPECT_EQ(config_error_key("grid.bogus = 1\n"), "grid.bogus");
  EXPECT_EQ(config_error_key("grid.N = 64\ngrid.N = 128\n"), "grid.N");
  EXPECT_EQ(config_error_key("weight.kappa = 1.5\n"), "weight.kappa");
  EXPECT_EQ(config_error_key("grid.N = abc\n"), "grid.N");
  EXPECT_EQ(config_error_key("grid.N = 63\n"), "grid.N");
  EXPECT_EQ(config_error_key("solver.dt0 = -1\n"), "solver.dt0");
  EXPECT_EQ(config_error_key("sweep.parameter = temperature\n"), "sweep.parameter");
  try {
    parse("weight.kappa = 1.5\n");
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(Config, SweepRange) {
  const auto c = parse("sweep.parameter = A\nsweep.min = 1\nsweep.max = 3\nsweep.count = 5\n");
  EXPECT_EQ(c.sweep.parameter, SweepSpec::Parameter::kAmplitude);
  ASSERT_EQ(c.sweep.values.size(), 5u);
  EXPECT_EQ(c.sweep.values.front(), 1.0);
  EXPECT_EQ(c.sweep.values.back(), 3.0);
}

TEST(Report, CsvAndSvg) {
  SeriesRow row;
  row.record.t = 0.1;
  row.record.I = 1.0 / 3.0;
  std::ostringstream csv;
  write_series_csv(csv, {row}, {"extra"}, {{2.0}});
  const std::string text = csv.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), std::string(kSeriesHeader) + ",extra");
  EXPECT_NE(text.find("0.33333333333333331"), std::string::npos);
  std::ostringstream svg;
  write_svg_plot(svg, {"t", "x", "y", true}, {{"s", {0, 1, 2}, {1, 10, 100}}});
  EXPECT_NE(svg.str().find("<svg"), std::string::npos);
  EXPECT_NE(svg.str().find("</svg>"), std::string::npos);
}

TEST(Commands, RiccatiExamples) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_riccati(1, 1, 2, {0.0}, out, err), exit_code::kOk);
  EXPECT_NE(out.str().find("t_star: 0.54930614433405"), std::string::npos);
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_riccati(1, 1, 1, {}, out2, err2), exit_code::kPositivity);
  EXPECT_NE(err2.str().find("I(0)√c1 − √c2 must be positive"), std::string::npos);
  std::ostringstream out3, err3;
  EXPECT_EQ(cmd_riccati(0.5, 0, 2, {}, out3, err3), exit_code::kOk);
  EXPECT_NE(out3.str().find("t_star: 1 "), std::string::npos);
}

TEST(Commands, RunZeroCoefficient) {
  auto c = parse("coefficient.kind = zero\nsolver.t_end = 0.2\ndiagnostics.snapshot_stride = 1\n"
                 "solver.sample_interval = 0.1\n");
  c.output_dir = scratch("run_zero");
  std::ostringstream out;
  EXPECT_EQ(cmd_run(c, out), exit_code::kOk);
  for (const char* f : {"series.csv", "summary.txt", "plots/I.svg", "plots/hs_norm.svg", "plots/dt.svg",
                        "snapshots/u_00000.bin", "snapshots/u_00002.bin"}) {
    EXPECT_TRUE(fs::exists(c.output_dir / f)) << f;
  }
  const auto csv = slurp(c.output_dir / "series.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSeriesHeader);
  EXPECT_NE(out.str().find("status: completed"), std::string::npos);
}

TEST(Commands, CheckZeroAmplitude) {
  const auto c = parse("initial.amplitude = 0\n");
  std::ostringstream out;
  EXPECT_EQ(cmd_check(c, out), exit_code::kConditions);
  EXPECT_NE(out.str().find("c1: 0.125"), std::string::npos);
}

TEST(Commands, SweepSingleZeroAmplitude) {
  auto c = parse("sweep.parameter = A\nsweep.values = 0\nsolver.t_end = 0.1\n");
  c.output_dir = scratch("sweep_zero");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_sweep(c, out, err), exit_code::kOk);
  const auto csv = slurp(c.output_dir / "sweep.csv");
  EXPECT_NE(csv.find("0,completed,nan"), std::string::npos);
  EXPECT_TRUE(fs::exists(c.output_dir / "plots/regime.svg"));
}

TEST(Commands, SweepIsDeterministicAndMonotone) {
  const std::string text =
      "sweep.parameter = A\nsweep.values = 0, 1000, 20000, 2000\nsweep.workers = 3\n"
      "solver.dt0 = 1e-6\nsolver.norm_blowup = 1e14\nsolver.gradient_blowup = 1e10\n";
  auto a = parse(text);
  auto b = parse(text);
  a.output_dir = scratch("sweep_a");
  b.output_dir = scratch("sweep_b");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_sweep(a, out, err), exit_code::kOk) << err.str();
  ASSERT_EQ(cmd_sweep(b, out, err), exit_code::kOk) << err.str();
  const auto ca = slurp(a.output_dir / "sweep.csv");
  EXPECT_EQ(ca, slurp(b.output_dir / "sweep.csv"));
  // Rows follow the listed order regardless of worker scheduling.
  const auto p0 = ca.find("\n0,completed");
  const auto p1 = ca.find("\n1000,completed");
  const auto p2 = ca.find("\n20000,blowup_detected");
  const auto p3 = ca.find("\n2000,completed");
  ASSERT_NE(p0, std::string::npos);
  ASSERT_NE(p1, std::string::npos);
  ASSERT_NE(p2, std::string::npos);
  ASSERT_NE(p3, std::string::npos);
  EXPECT_TRUE(p0 < p1 && p1 < p2 && p2 < p3);
}

TEST(Commands, SweepNamesFailingValue) {
  auto c = parse("sweep.parameter = A\nsweep.values = 1, 2\ngrid.N = 16\nsolver.t_end = 0.01\n");
  c.output_dir = scratch("sweep_fail");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_sweep(c, out, err), exit_code::kInternal);
  EXPECT_NE(err.str().find("sweep value 1 failed"), std::string::npos);
}

TEST(Commands, PicardOutcomes) {
  auto small = parse("coefficient.kind = zero\npicard.T = 0.1\n");
  small.output_dir = scratch("picard_small");
  std::ostringstream out;
  EXPECT_EQ(cmd_picard(small, out), exit_code::kOk);

  auto large = parse("initial.amplitude = 50\npicard.T = 0.5\n");
  large.output_dir = scratch("picard_large");
  std::ostringstream out2;
  EXPECT_EQ(cmd_picard(large, out2), exit_code::kOk);
  EXPECT_NE(out2.str().find("smallness >= 1"), std::string::npos);
}

TEST(Commands, OracleColeHopfDefaults) {
  auto c = parse("coefficient.kind = one\ninitial.kind = cosine\ninitial.amplitude = 0.1\n"
                 "oracle.kind = cole_hopf\nsolver.t_end = 0.5\n");
  c.output_dir = scratch("oracle");
  std::ostringstream out;
  EXPECT_EQ(cmd_oracle(c, out), exit_code::kOk) << out.str();
  const auto csv = slurp(c.output_dir / "oracle.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), std::string(kSeriesHeader) + ",linf_error,hs_error");
}
