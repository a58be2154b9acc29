// Copyright 2026 The sbmsdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end runs of the command-line tool.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "sbmsdp/bounds_lab.h"
#include "sbmsdp/io.h"

namespace sbmsdp {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sbmsdp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with stdout captured to a file; returns the exit code.
  int run(const std::string& args) {
    const std::string cmd = std::string(SBMSDP_CLI) + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenerateThenSolve) {
  ASSERT_EQ(run("generate --alpha 6 --beta 1 --k 3 --m 20 --seed 1 -o " + path("g.json")), 0);
  const SbmInstance inst = read_instance_file(path("g.json"));
  EXPECT_EQ(inst.graph.num_vertices(), 60);
  ASSERT_EQ(run("solve --sdp balanced " + path("g.json")), 0);
  const Json out = parse_json(read("stdout.txt"));
  EXPECT_TRUE(out["solve"].contains("objective"));
  EXPECT_TRUE(out["verdict"].contains("is_integral"));
  EXPECT_EQ(out["solve"]["status"], "converged");
}

TEST_F(CliTest, InvalidParametersFail) {
  // p = 9 ln 20 / 20 > 1.
  EXPECT_EQ(run("generate --alpha 9 --beta 1 --k 3 --m 20 -o " + path("g.json")), 1);
  EXPECT_NE(read("stderr.txt").find("exceeds 1"), std::string::npos);
}

TEST_F(CliTest, CertifyCliques) {
  ASSERT_EQ(run("generate --cliques --k 3 --m 5 -o " + path("c.json")), 0);
  ASSERT_EQ(run("certify " + path("c.json") + " --partition planted"), 0);
  const Json out = parse_json(read("stdout.txt"));
  EXPECT_EQ(out["verified"], true);
  EXPECT_EQ(out["unique"], true);
}

TEST_F(CliTest, CertifyFailureExitsNonZero) {
  ASSERT_EQ(run("generate --cliques --k 2 --m 3 -o " + path("c.json")), 0);
  std::ofstream(path("p.json")) << "[0, 1, 0, 1, 0, 1]";
  EXPECT_EQ(run("certify " + path("c.json") + " --partition " + path("p.json")), 1);
}

TEST_F(CliTest, MalformedJsonExitsTwo) {
  std::ofstream(path("bad.json")) << "{\"n\": 3,\n \"k\" 2}";
  EXPECT_EQ(run("solve " + path("bad.json")), 2);
  EXPECT_NE(read("stderr.txt").find("line 2"), std::string::npos);
  EXPECT_EQ(run("solve --bogus-flag " + path("bad.json")), 2);
}

TEST_F(CliTest, AdversaryLogReplays) {
  ASSERT_EQ(run("generate --alpha 4 --beta 1 --k 2 --m 10 --seed 3 -o " + path("g.json")), 0);
  ASSERT_EQ(run("adversary " + path("g.json") + " --seed 4 -o " + path("a.json") + " --log " +
                path("log.json")),
            0);
  ASSERT_EQ(run("adversary " + path("g.json") + " --actions " + path("log.json") + " -o " +
                path("b.json")),
            0);
  EXPECT_EQ(read_instance_file(path("a.json")).graph, read_instance_file(path("b.json")).graph);
  EXPECT_EQ(parse_json(read("stdout.txt"))["objective_shift_ok"], true);
}

TEST_F(CliTest, BoundsJson) {
  ASSERT_EQ(run("bounds --json --trials 1000"), 0);
  const Json out = parse_json(read("stdout.txt"));
  EXPECT_NEAR(out["chernoff"]["upper"].get<double>(), 0.021006, 1e-6);
  EXPECT_DOUBLE_EQ(out["rate"]["g"].get<double>(), g_function(4.0, 1.0, 0.5));
}

TEST_F(CliTest, SweepWithConfigFile) {
  std::ofstream(path("grid.cfg")) << "# small grid\nalpha-min = 2\nalpha-max = 5\n"
                                     "alpha-steps=2\nbeta-min=0\nbeta-max=1\nbeta-steps=2\n"
                                     "m=8\ntrials=5\n";
  ASSERT_EQ(run("sweep --config " + path("grid.cfg") + " --trials 2 --csv " + path("s.csv") +
                " --svg " + path("s.svg")),
            0);
  const std::string csv = read("s.csv");
  EXPECT_EQ(csv.rfind("alpha,beta,trials,integral_count,fraction", 0), 0u);
  EXPECT_NE(csv.find("\n2,0,2,"), std::string::npos);  // command line wins
  EXPECT_NE(read("s.svg").find("<svg"), std::string::npos);
}

}  // namespace
}  // namespace sbmsdp
