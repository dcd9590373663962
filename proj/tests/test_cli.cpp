// End-to-end tests of the cosserat-critic binary (path passed as argv[1]):
// exit codes, output determinism, and the catalog -> verify round trip.
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cosserat/report.hpp"

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>/tmp/cli_stderr.txt";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), std::move(out)};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ReduceIdentity) {
  write_file("/tmp/cli_id3.json", R"({"F": [[1,0,0],[0,1,0],[0,0,1]], "mu": 1, "mu_c": 0})");
  const RunResult r = run("reduce --input /tmp/cli_id3.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("lambdas: 1 1 1"), std::string::npos);
  EXPECT_NE(r.output.find("mu_gt_muc"), std::string::npos);
}

TEST(Cli, ReduceGrioliNotice) {
  write_file("/tmp/cli_grioli.json", R"({"F": [[2,0],[0,1]], "mu": 1, "mu_c": 1})");
  const RunResult r = run("reduce --input /tmp/cli_grioli.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("grioli"), std::string::npos);
}

TEST(Cli, CatalogPlanarReference) {
  write_file("/tmp/cli_n2.json", R"({"lambdas": [2, 1]})");
  const RunResult r = run("catalog --input /tmp/cli_n2.json --out /tmp/cli_n2_out.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("critical points (4)"), std::string::npos);
  EXPECT_NE(r.output.find("R^(3)_+"), std::string::npos);

  const cosserat::CatalogReport rep =
      cosserat::catalog_report_from_json(read_file("/tmp/cli_n2_out.json"));
  EXPECT_EQ(rep.catalog.points.size(), 4u);
}

TEST(Cli, CatalogVerifyRoundTrip) {
  write_file("/tmp/cli_421.json", R"({"lambdas": [4, 2, 1]})");
  const RunResult r = run("catalog --input /tmp/cli_421.json --out /tmp/cli_421_out.json");
  ASSERT_EQ(r.exit_code, 0);

  const cosserat::CatalogReport rep =
      cosserat::catalog_report_from_json(read_file("/tmp/cli_421_out.json"));
  ASSERT_FALSE(rep.catalog.points.empty());
  // every listed rotation re-verifies as critical through the CLI
  for (const auto& p : rep.catalog.points) {
    std::ostringstream rot;
    rot << "[";
    for (int i = 0; i < 3; ++i) {
      rot << (i ? "," : "") << "[";
      for (int j = 0; j < 3; ++j) {
        char num[64];
        std::snprintf(num, sizeof(num), "%.17g", p.rotation.matrix()(i, j));
        rot << (j ? "," : "") << num;
      }
      rot << "]";
    }
    rot << "]";
    write_file("/tmp/cli_rot.json", rot.str());
    const RunResult v = run("verify --input /tmp/cli_421.json --rotation /tmp/cli_rot.json");
    EXPECT_EQ(v.exit_code, 0) << p.name;
    EXPECT_NE(v.output.find("CRITICAL"), std::string::npos) << p.name;
  }
}

TEST(Cli, VerifyRejectsNonRotationWithValidationExit) {
  write_file("/tmp/cli_in.json", R"({"F": [[2,0],[0,1]]})");
  write_file("/tmp/cli_bad_rot.csv", "1, 0.3\n0, 1\n");
  const RunResult r = run("verify --input /tmp/cli_in.json --rotation /tmp/cli_bad_rot.csv");
  EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, ParseErrorsExitWithCode2) {
  write_file("/tmp/cli_broken.json", "{ not json");
  const RunResult r = run("catalog --input /tmp/cli_broken.json");
  EXPECT_EQ(r.exit_code, 2);

  const RunResult missing = run("catalog --input /tmp/does_not_exist.json");
  EXPECT_EQ(missing.exit_code, 2);
}

TEST(Cli, ValidationErrorsExitWithCode3) {
  write_file("/tmp/cli_n4.json", R"({"lambdas": [4, 3, 2, 1]})");
  const RunResult r = run("catalog --input /tmp/cli_n4.json");
  EXPECT_EQ(r.exit_code, 3);

  write_file("/tmp/cli_negdet.json", R"({"F": [[1,0],[0,-1]]})");
  EXPECT_EQ(run("reduce --input /tmp/cli_negdet.json").exit_code, 3);
}

TEST(Cli, MatrixCsvFlagAndMuOverrides) {
  write_file("/tmp/cli_f.csv", "2, 0, 0\n0, 2, 0\n0, 0, 0.5\n");
  const RunResult r = run("reduce --matrix-csv /tmp/cli_f.csv --mu 2 --mu-c 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("lambdas: 1 1 0.25"), std::string::npos);
}

TEST(Cli, SolveIsSeededAndDeterministic) {
  write_file("/tmp/cli_solve.json", R"({"lambdas": [2, 1]})");
  const std::string args =
      "solve --input /tmp/cli_solve.json --starts 12 --seed 9 --out /tmp/cli_solve_a.json";
  const RunResult a = run(args);
  EXPECT_EQ(a.exit_code, 0);
  const std::string first = read_file("/tmp/cli_solve_a.json");
  const RunResult b = run(
      "solve --input /tmp/cli_solve.json --starts 12 --seed 9 --out /tmp/cli_solve_b.json");
  EXPECT_EQ(b.exit_code, 0);
  EXPECT_EQ(first, read_file("/tmp/cli_solve_b.json"));
  EXPECT_EQ(a.output, b.output);
  EXPECT_NE(a.output.find("unmatched: 0"), std::string::npos);
}

TEST(Cli, SolveCsvFormat) {
  write_file("/tmp/cli_solve2.json", R"({"lambdas": [2, 1]})");
  const RunResult r = run(
      "solve --input /tmp/cli_solve2.json --starts 4 --seed 1 --format csv --out "
      "/tmp/cli_solve2.csv");
  EXPECT_EQ(r.exit_code, 0);
  const std::string csv = read_file("/tmp/cli_solve2.csv");
  EXPECT_NE(csv.find("start,matched"), std::string::npos);
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cosserat-critic>\n");
    return 2;
  }
  g_binary = argv[1];
  return RUN_ALL_TESTS();
}
