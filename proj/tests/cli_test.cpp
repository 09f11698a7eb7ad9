// Copyright 2026 The lapsep Authors
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

#include "lapsep_cli.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.hpp"

namespace lapsep::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "lapsep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliTest, CheckEntangledAndSeparable) {
  auto r = RunCli({"--shape", "2x2", "check", "Ch", "--labeling", "0 1 2 3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "degree condition FAIL (vertex 0)"));
  EXPECT_TRUE(Contains(r.out, "NPT, min eigenvalue -0.0690355937"));
  EXPECT_TRUE(Contains(r.out, "verdict: ENTANGLED"));

  r = RunCli({"--shape", "2x2", "check", "Ch", "--labeling", "0 3 1 2", "--dump"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "verdict: SEPARABLE (qubit-cut degree condition)"));
  EXPECT_TRUE(Contains(r.out, "rho:\n"));
  EXPECT_TRUE(Contains(r.out, "1/6"));
}

TEST(CliTest, CheckRejectsBadInput) {
  auto r = RunCli({"--shape", "2x2", "check", "Ch", "--labeling", "0 0 1 2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Contains(r.err, "error:"));
  r = RunCli({"--shape", "2x3", "check", "Ch", "--labeling", "0 1 2 3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Contains(r.err, "vertices"));
  r = RunCli({"check", "Ch", "--labeling", "0 1 2 3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Contains(r.err, "--shape"));
  r = RunCli({"--shape", "2x2", "check", "C~~", "--labeling", "0 1 2 3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Contains(r.err, "at byte 2"));
  r = RunCli({"--shape", "2x2"});
  EXPECT_EQ(r.code, 1);
  r = RunCli({"--shape", "2x2", "--format", "xml", "classify", "C~"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliTest, PtGraph) {
  auto r = RunCli({"--shape", "2x2", "pt-graph", "Ch", "--labeling", "0 1 2 3"});
  EXPECT_EQ(r.code, 0) << r.err;
  Graph expected(4);
  expected.AddEdge(0, 1);
  expected.AddEdge(0, 3);
  expected.AddEdge(2, 3);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), ToGraph6(expected));
  EXPECT_TRUE(Contains(r.out, "0\t1\t2\n"));
  EXPECT_TRUE(Contains(r.out, "FAIL\n"));
  r = RunCli({"--shape", "2x2", "pt-graph", "Ch", "--labeling", "0 1 2 3", "--cut", "2"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliTest, Entangle) {
  auto r = RunCli({"--shape", "2x3", "entangle", "EhEG"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "case: CASE2\n"));
  EXPECT_TRUE(Contains(r.out, "k t r s: 4 2 0 2\n"));
  EXPECT_TRUE(Contains(r.out, "npt min eigenvalue: -"));

  r = RunCli({"--shape", "2x3", "entangle", "Esa?"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "case: FALLBACK_SEARCH\n"));

  r = RunCli({"--shape", "2x2", "entangle", "C]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Contains(r.out, "exhaustive"));

  r = RunCli({"--shape", "2x2", "--budget", "1", "entangle", "C`"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(Contains(r.out, "budget exhausted"));

  r = RunCli({"--shape", "2x2", "entangle", "C~"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Contains(r.err, "complete graphs"));
}

TEST(CliTest, ClassifyFormats) {
  auto r = RunCli({"--shape", "2x2", "--no-timing", "classify", "Ch"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, std::string(lapsep::kTsvHeader) +
                       "\nCh\t4\t2x2\tSE\t16\t8\t0\t0 1 3 2\t0 1 2 3\t-\n");
  r = RunCli({"--shape", "2x2", "--format", "json", "classify", "C~"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["class"], "S");
  EXPECT_TRUE(j["elapsed_ms"].is_number());
  r = RunCli({"--shape", "2x2", "--full", "--budget", "3", "classify", "C~"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(Contains(r.out, "UNRESOLVED"));
}

TEST(CliTest, ScanIsDeterministicAcrossJobs) {
  std::string input;
  for (const auto& line : lapsep::testing::ReadLines("graphs6.g6")) {
    input += line + "\n";
  }
  const auto one = RunCli({"--shape", "2x3", "--no-timing", "--jobs", "1", "scan"}, input);
  const auto many = RunCli({"--shape", "2x3", "--no-timing", "--jobs", "8", "scan", "-"}, input);
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(one.code, 1);  // the empty graph is an error row
  const auto file = RunCli({"--shape", "2x3", "--no-timing", "scan",
                            std::string(LAPSEP_TEST_DATA_DIR) + "/graphs6.g6"});
  EXPECT_EQ(file.out, one.out);
  EXPECT_EQ(RunCli({"--shape", "2x3", "scan", "/nonexistent"}).code, 1);
}

TEST(CliTest, ScanJsonLines) {
  const auto r = RunCli({"--shape", "2x2", "--format", "json", "--no-timing", "scan"},
                        "C~\nCh\nbad\n");
  EXPECT_EQ(r.code, 1);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["class"], "S");
  EXPECT_EQ(rows[1]["class"], "SE");
  EXPECT_TRUE(rows[2].contains("error"));
  EXPECT_EQ(rows[2]["line"], 3);
  EXPECT_TRUE(Contains(r.err, "line 3: "));
}

TEST(CliTest, EnvironmentProvidesDefaults) {
  ::setenv("LAPSEP_SHAPE", "2x2", 1);
  const auto r = RunCli({"--no-timing", "classify", "C~"});
  ::unsetenv("LAPSEP_SHAPE");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "\tS\t"));
}

}  // namespace
}  // namespace lapsep::cli
