#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "geoloop/cli.hpp"
#include "geoloop/phases.hpp"
#include "geoloop/schedule_io.hpp"
#include "geoloop/twoqubit.hpp"

namespace geoloop {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "geoloop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(GEOLOOP_TEST_TMPDIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,x,y,z");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

TEST(ParseAngle, Literals) {
  EXPECT_DOUBLE_EQ(cli::parse_angle("0.5"), 0.5);
  EXPECT_DOUBLE_EQ(cli::parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(cli::parse_angle("pi/4"), kPi / 4);
  EXPECT_DOUBLE_EQ(cli::parse_angle("-pi/2"), -kPi / 2);
  EXPECT_DOUBLE_EQ(cli::parse_angle("2*pi/3"), 2 * kPi / 3);
  EXPECT_DOUBLE_EQ(cli::parse_angle("3pi/2"), 3 * kPi / 2);
  EXPECT_THROW(cli::parse_angle("pie"), Error);
  EXPECT_THROW(cli::parse_angle("pi/0"), Error);
  EXPECT_THROW(cli::parse_angle("abc"), Error);
}

TEST(Cli, SynthesizeQuarterPi) {
  const auto path = tmp("syn_pi4.yaml");
  const CliRun r = run({"synthesize", "--chi", "0.7853981633974483", "--omega", "1", "--omega2", "2", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto& s = std::get<Schedule>(load_schedule(path));
  ASSERT_EQ(s.segments.size(), 4u);
  EXPECT_NEAR(s.segments[3].duration, (kPi / 2) / 2.0, 1e-15);
}

TEST(Cli, SynthesizeHalfPiKeepsZeroSegment) {
  const auto path = tmp("syn_pi2.yaml");
  ASSERT_EQ(run({"synthesize", "--chi", "pi/2", "-o", path}).code, 0);
  const auto& s = std::get<Schedule>(load_schedule(path));
  ASSERT_EQ(s.segments.size(), 4u);
  EXPECT_EQ(s.segments[3].duration, 0.0);
}

TEST(Cli, SynthesizeOutOfRange) {
  const CliRun r = run({"synthesize", "--chi", "2.0", "-o", tmp("bad.yaml")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("chi out of range"), std::string::npos);
}

TEST(Cli, VerifySingleQubit) {
  const auto path = tmp("syn_pi3.yaml");
  ASSERT_EQ(run({"synthesize", "--chi", "pi/3", "--omega", "0.3", "--omega2", "4", "-o", path}).code, 0);
  const CliRun pass = run({"verify", path, "--target", "u_chi:pi/3"});
  EXPECT_EQ(pass.code, 0);
  EXPECT_NE(pass.out.find("result: PASS"), std::string::npos);
  const CliRun fail = run({"verify", path, "--target", "u_chi:pi/4"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("result: FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", path, "--target", "u2"}).code, 2);
  EXPECT_EQ(run({"verify", path, "--target", "bogus"}).code, 2);
}

TEST(Cli, VerifyTwoQubitTargets) {
  const auto natural = tmp("u2.yaml");
  const auto selective = tmp("u2p.yaml");
  const auto controlled = tmp("cu.yaml");
  ASSERT_EQ(run({"synthesize", "--two-qubit", "natural", "--coupling-j", "0.2", "-o", natural}).code, 0);
  ASSERT_EQ(run({"synthesize", "--two-qubit", "line_selective", "-o", selective}).code, 0);
  ASSERT_EQ(run({"synthesize", "--controlled", "--chi", "0.9", "-o", controlled}).code, 0);
  EXPECT_EQ(run({"verify", natural, "--target", "u2"}).code, 0);
  EXPECT_EQ(run({"verify", natural, "--target", "u2_prime"}).code, 1);
  EXPECT_EQ(run({"verify", selective, "--target", "u2_prime"}).code, 0);
  EXPECT_EQ(run({"verify", controlled, "--target", "controlled_u:0.9"}).code, 0);
}

TEST(Cli, VerifyCorruptedFile) {
  const auto path = tmp("corrupt.yaml");
  std::ofstream(path) << "version: 1\nkind: single_qubit\nsegments: [ {axis: [0,0,1], omega: 1\n";
  const CliRun r = run({"verify", path, "--target", "u_chi:0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"verify", tmp("missing.yaml"), "--target", "u_chi:0"}).code, 2);
}

TEST(Cli, PhaseReport) {
  const auto path = tmp("phase_pi4.yaml");
  ASSERT_EQ(run({"synthesize", "--chi", "pi/4", "-o", path}).code, 0);
  const CliRun r = run({"phase", path, "--chi", "pi/4", "--phi", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "total: -1.570796326795\ndynamical: 0.000000000000\ngeometric: -1.570796326795\n");

  const auto empty = tmp("empty.yaml");
  save_schedule(empty, Schedule{});
  const CliRun z = run({"phase", empty, "--chi", "0.3"});
  EXPECT_EQ(z.out, "total: 0.000000000000\ndynamical: 0.000000000000\ngeometric: 0.000000000000\n");

  const CliRun bad = run({"phase", path, "--chi", "pi/3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("initial state not cyclic"), std::string::npos);
}

TEST(Cli, ExportPath) {
  const auto sched = tmp("path_pi2.yaml");
  ASSERT_EQ(run({"synthesize", "--chi", "pi/2", "-o", sched}).code, 0);
  const auto csv = tmp("path_pi2.csv");
  ASSERT_EQ(run({"export-path", sched, "--chi", "pi/2", "--samples", "200", "-o", csv}).code, 0);
  const auto rows = read_csv(csv);
  ASSERT_EQ(rows.size(), 1u + 3u * 199u);
  EXPECT_NEAR(rows.front()[0], 0.0, 0.0);
  EXPECT_NEAR(rows.front()[1], 1.0, 1e-15);
  EXPECT_NEAR(rows.front()[3], 0.0, 1e-15);
  for (int c = 1; c <= 3; ++c) EXPECT_NEAR(rows.front()[c], rows.back()[c], 1e-9);
  EXPECT_EQ(slurp(csv).back(), '\n');

  const auto csv2 = tmp("path_pi4_2.csv");
  const auto sched2 = tmp("path_pi4.yaml");
  ASSERT_EQ(run({"synthesize", "--chi", "pi/4", "-o", sched2}).code, 0);
  ASSERT_EQ(run({"export-path", sched2, "--chi", "pi/4", "--samples", "2", "-o", csv2}).code, 0);
  EXPECT_EQ(read_csv(csv2).size(), 1u + 4u);

  EXPECT_EQ(run({"export-path", sched2, "--samples", "2", "-o", "/nonexistent/dir/x.csv"}).code, 2);
  EXPECT_EQ(run({"export-path", sched2, "--samples", "1", "-o", csv2}).code, 2);
}

TEST(Cli, NoiseSweep) {
  const auto path = tmp("noise_pi4.yaml");
  ASSERT_EQ(run({"synthesize", "--chi", "pi/4", "-o", path}).code, 0);
  const CliRun zero = run({"noise", path, "--target", "u_chi:pi/4", "--trials", "5"});
  ASSERT_EQ(zero.code, 0) << zero.err;
  EXPECT_NE(zero.out.find("trial,fidelity\n0,1\n"), std::string::npos) << zero.out;
  EXPECT_NE(zero.out.find("mean,1\n"), std::string::npos);

  const std::vector<std::string> args = {"noise", path, "--target", "u_chi:pi/4", "--sigma-tau", "0.01",
                                         "--trials", "1000", "--seed", "99"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.out, b.out);
  const auto mean_pos = a.out.find("mean,");
  ASSERT_NE(mean_pos, std::string::npos);
  EXPECT_GE(std::stod(a.out.substr(mean_pos + 5)), 0.99);

  EXPECT_EQ(run({"noise", path, "--target", "u2"}).code, 2);
  EXPECT_EQ(run({"noise", tmp("corrupt.yaml"), "--target", "u_chi:0"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  const CliRun help = run({"phase", "--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("--chi"), std::string::npos);
}

}  // namespace
}  // namespace geoloop
