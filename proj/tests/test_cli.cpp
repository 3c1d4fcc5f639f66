// SPDX-License-Identifier: Apache-2.0

// End-to-end tests of the command-line tool, driven through the real
// binary (path injected at build time as ZDDMAP_CLI_PATH).

#include "zddmap/io/circuit.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("zddmap_cli_tests_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

class CleanupEnv : public ::testing::Environment {
public:
  void TearDown() override {
    std::error_code ec;
    fs::remove_all(work_dir(), ec);
  }
};
const auto* const kCleanup = ::testing::AddGlobalTestEnvironment(new CleanupEnv);

fs::path fresh_path(const std::string& stem) {
  static int counter = 0;
  return work_dir() / (stem + "_" + std::to_string(counter++));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  const fs::path out_path = fresh_path("stdout");
  const fs::path err_path = fresh_path("stderr");
  std::string cmd = "'" ZDDMAP_CLI_PATH "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " >'" + out_path.string() + "' 2>'" + err_path.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

fs::path three_gate_file() {
  const fs::path p = fresh_path("three_gates");
  spit(p, ".v a b c d\ncx a b\ncx b c\ncx b d\n");
  return p;
}

TEST(Cli, FullRunWithReport) {
  const auto circ = three_gate_file();
  const auto report = fresh_path("report");
  const auto r = run_cli({"--circuit", circ.string(), "--device", "ring:4", "--report",
                          report.string(), "-v"});
  ASSERT_EQ(r.exit_code, 0) << r.err;

  const auto mapped = zddmap::io::parse_circuit(r.out);
  EXPECT_EQ(mapped.qubits, (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(mapped.gates.size(), 4u);

  const json doc = json::parse(slurp(report));
  EXPECT_EQ(doc.at("schema_version"), 1);
  EXPECT_EQ(doc.at("fully_mapped"), true);
  EXPECT_EQ(doc.at("swaps_inserted"), 1);
  EXPECT_EQ(doc.at("maximal_partition"), 0);
  EXPECT_EQ(doc.at("input").at("depth"), 3);
  EXPECT_EQ(doc.at("input").at("two_qubit_gates"), 3);
  EXPECT_EQ(doc.at("output").at("volume"), 4);
  EXPECT_EQ(doc.at("output").at("two_qubit_gates"), 4);
  ASSERT_EQ(doc.at("partitions").size(), 1u);
  EXPECT_EQ(doc.at("partitions")[0].at("begin"), 1);
  EXPECT_EQ(doc.at("partitions")[0].at("end"), 3);
  EXPECT_EQ(doc.at("partitions")[0].at("mapping_count"), "8");
  ASSERT_EQ(doc.at("partitions")[0].at("swap_layers").size(), 1u);
  EXPECT_EQ(doc.at("partitions")[0].at("swap_layers")[0].at("position"), 3);
  EXPECT_EQ(doc.at("assignment").size(), 4u);
  EXPECT_TRUE(doc.at("wall_time_ms").is_number());
  EXPECT_NE(r.err.find("fully mapped: yes"), std::string::npos);
}

TEST(Cli, SelfcheckPasses) {
  const auto circ = three_gate_file();
  const auto r =
      run_cli({"--circuit", circ.string(), "--device", "ring:4", "--selfcheck"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
}

TEST(Cli, OutAndDotFiles) {
  const auto circ = three_gate_file();
  const auto out = fresh_path("mapped");
  const auto dot = fresh_path("diagram");
  const auto r = run_cli({"--circuit", circ.string(), "--device", "ring:4", "--out",
                          out.string(), "--dot", dot.string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto mapped = zddmap::io::parse_circuit(slurp(out));
  EXPECT_EQ(mapped.gates.size(), 4u);
  const std::string diagram = slurp(dot);
  EXPECT_NE(diagram.find("digraph"), std::string::npos);
  // Diagram nodes carry pseudo+wire names.
  EXPECT_NE(diagram.find("aA"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).exit_code, 1);
  EXPECT_EQ(run_cli({"--circuit", "x"}).exit_code, 1); // missing --device
  const auto circ = three_gate_file();
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:4", "--frobnicate"})
                .exit_code,
            1);
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:4", "--alpha", "x"})
                .exit_code,
            1);
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:4", "--beta", "0",
                     "--gamma", "0"})
                .exit_code,
            1);
  const auto p = fresh_path("dup");
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:4", "--out",
                     p.string(), "--report", p.string()})
                .exit_code,
            1);
}

TEST(Cli, HelpSucceeds) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("--circuit"), std::string::npos);
}

TEST(Cli, ParseErrors) {
  const auto bad = fresh_path("bad_circuit");
  spit(bad, ".v a b\ncx a z\n");
  const auto r = run_cli({"--circuit", bad.string(), "--device", "ring:4"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  EXPECT_EQ(run_cli({"--circuit", "/nonexistent.circ", "--device", "ring:4"}).exit_code,
            2);
  const auto circ = three_gate_file();
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:x"}).exit_code, 2);
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:2"}).exit_code, 2);

  const auto bad_dev = fresh_path("bad_device");
  spit(bad_dev, ".q A B\nA A\n");
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", bad_dev.string()}).exit_code,
            2);
}

TEST(Cli, InfeasibleInstances) {
  const auto five = fresh_path("five_pseudos");
  spit(five, ".v a b c d e\ncx a b\n");
  EXPECT_EQ(run_cli({"--circuit", five.string(), "--device", "ring:4"}).exit_code, 3);

  const auto edgeless = fresh_path("edgeless_device");
  spit(edgeless, ".q A B\n");
  const auto pair = fresh_path("pair");
  spit(pair, ".v a b\ncx a b\n");
  EXPECT_EQ(run_cli({"--circuit", pair.string(), "--device", edgeless.string()}).exit_code,
            3);
}

TEST(Cli, PartialMappingStillSucceeds) {
  // gamma = 0 disables SWAP insertion, splitting the run into blocks.
  const auto circ = three_gate_file();
  const auto report = fresh_path("partial_report");
  const auto r = run_cli({"--circuit", circ.string(), "--device", "ring:4", "--gamma",
                          "0", "--report", report.string(), "--selfcheck"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json doc = json::parse(slurp(report));
  EXPECT_EQ(doc.at("fully_mapped"), false);
  EXPECT_EQ(doc.at("swaps_inserted"), 0);
  EXPECT_EQ(doc.at("partitions").size(), 2u);
}

TEST(Cli, RationalWeightForms) {
  const auto circ = three_gate_file();
  EXPECT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:4", "--alpha", "1/3",
                     "--beta", "0.25", "--gamma", "2"})
                .exit_code,
            0);
}

std::string strip_wall_time(const std::string& report) {
  std::istringstream in(report);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("wall_time_ms") == std::string::npos) out << line << '\n';
  }
  return out.str();
}

TEST(Cli, DeterministicOutputs) {
  const auto circ = three_gate_file();
  const auto out1 = fresh_path("det_out1");
  const auto out2 = fresh_path("det_out2");
  const auto rep1 = fresh_path("det_rep1");
  const auto rep2 = fresh_path("det_rep2");
  ASSERT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:4", "--out",
                     out1.string(), "--report", rep1.string()})
                .exit_code,
            0);
  ASSERT_EQ(run_cli({"--circuit", circ.string(), "--device", "ring:4", "--out",
                     out2.string(), "--report", rep2.string()})
                .exit_code,
            0);
  EXPECT_EQ(slurp(out1), slurp(out2));
  EXPECT_EQ(strip_wall_time(slurp(rep1)), strip_wall_time(slurp(rep2)));
}

} // namespace
