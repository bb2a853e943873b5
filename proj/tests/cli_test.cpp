// Copyright 2026 The dpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end checks of the command line tool. The binary path comes from
// the build system via DPCHECK_CLI_PATH.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

int run(const std::string& args) {
  const std::string command =
      std::string(DPCHECK_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string temp_path(const char* name) {
  return ::testing::TempDir() + "/" + name;
}

TEST(CliTest, ListExitsCleanly) { EXPECT_EQ(run("list"), 0); }

TEST(CliTest, UnknownMechanismIsAConfigError) {
  EXPECT_EQ(run("detect --mechanism bogus --epsilon0 0.5 --test-eps 0.5"), 2);
}

TEST(CliTest, MalformedSweepIsAConfigError) {
  EXPECT_EQ(run("detect --mechanism svt --epsilon0 0.5 --sweep nope"), 2);
  EXPECT_EQ(run("detect --mechanism svt --epsilon0 0.5 --sweep 1:0:0.1"), 2);
  EXPECT_EQ(run("detect --mechanism svt --epsilon0 0.5 --test-eps 0.5 "
                "--sweep 0.1:1:0.1"),
            2);
  EXPECT_EQ(run("detect --mechanism svt --epsilon0 0.5 --test-eps 0.5 "
                "--format yaml"),
            2);
}

TEST(CliTest, SinglePointCsvRun) {
  const std::string out = temp_path("cli_single.csv");
  const int code =
      run("detect --mechanism histogram_wrong_scale --epsilon0 0.2 "
          "--test-eps 0.2 --n-detect 3000 --n-select 1500 --seed 9 --out " +
          out);
  EXPECT_EQ(code, 0);
  const std::string csv = read_file(out);
  EXPECT_NE(csv.find("mechanism,epsilon0,test_epsilon"), std::string::npos);
  EXPECT_NE(csv.find("histogram_wrong_scale,0.2,0.2,"), std::string::npos);
}

TEST(CliTest, JsonFormatParses) {
  const std::string out = temp_path("cli_single.json");
  const int code =
      run("detect --mechanism svt --epsilon0 0.5 --test-eps 0.4 "
          "--n-detect 2000 --n-select 1000 --seed 9 --format json --out " +
          out);
  EXPECT_EQ(code, 0);
  const auto doc = nlohmann::json::parse(read_file(out));
  EXPECT_EQ(doc["config"]["mechanism"], "svt");
  EXPECT_EQ(doc["results"].size(), 1u);
}

TEST(CliTest, FailedGridPointYieldsExitCodeThree) {
  // Test epsilon 12 pushes the selector's frequency filter above the sample
  // count, so that point fails.
  const int code =
      run("detect --mechanism svt --epsilon0 0.5 --test-eps 12 "
          "--n-detect 500 --n-select 300 --seed 9");
  EXPECT_EQ(code, 3);
}

TEST(CliTest, WorkerCountLeavesTheReportUnchanged) {
  const std::string base =
      "detect --mechanism isvt1 --epsilon0 0.5 --sweep 0.3:0.5:0.1 "
      "--n-detect 1500 --n-select 800 --seed 33 ";
  const std::string out1 = temp_path("cli_w1.csv");
  const std::string out2 = temp_path("cli_w2.csv");
  ASSERT_EQ(run(base + "--workers 1 --out " + out1), 0);
  ASSERT_EQ(run(base + "--workers 3 --out " + out2), 0);

  // All but the trailing wall-time column must agree byte for byte.
  std::istringstream a(read_file(out1));
  std::istringstream b(read_file(out2));
  std::string la, lb;
  int lines = 0;
  while (std::getline(a, la) && std::getline(b, lb)) {
    if (!la.empty() && la[0] != '#') {
      const auto ca = la.rfind(',');
      const auto cb = lb.rfind(',');
      if (ca != std::string::npos) la.resize(ca);
      if (cb != std::string::npos) lb.resize(cb);
    }
    ASSERT_EQ(la, lb);
    ++lines;
  }
  EXPECT_GT(lines, 3);
}

}  // namespace
