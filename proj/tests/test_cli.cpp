// Copyright 2026 The chibind Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#ifndef CHIBIND_CLI_PATH
#error "CHIBIND_CLI_PATH must name the chibind executable"
#endif

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

// Captures stdout; stderr is merged so error messages can be inspected.
CliResult run(const std::string& args) {
  CliResult r;
  const std::string cmd = std::string(CHIBIND_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

TEST(Cli, ColorsTheFiveCycle) {
  const CliResult r = run("color --pipeline p5-k23 --g6 Dhc");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("colors used: 3 (bound 3"), std::string::npos) << r.out;
}

TEST(Cli, ColorsFromAnEdgeList) {
  const CliResult r = run("color --pipeline sumner --edges 0-1,1-2,2-3,3-4,4-0");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("colors used: 3"), std::string::npos) << r.out;
}

TEST(Cli, ReportsTheForbiddenEmbedding) {
  const CliResult r = run("color --pipeline p5-k23 --edges 0-1,1-2,2-3,3-4");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("P5"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[0,1,2,3,4]"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeFindsHomogeneousSet) {
  const CliResult r = run("analyze --edges 0-2,0-3,0-4,1-2,1-3,1-4");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("homogeneous set {0,1}"), std::string::npos) << r.out;
}

TEST(Cli, VerifyAndListings) {
  const CliResult v = run("verify --target chi-p5-k23 --n 6 --threads 2");
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_NE(v.out.find("no violations"), std::string::npos);
  const CliResult j = run("verify --target chi-p5-k23 --n 5 --json -");
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(j.out.rfind("{", 0), 0U) << j.out;
  EXPECT_NE(run("targets").out.find("dominating-p5"), std::string::npos);
  EXPECT_NE(run("pipelines").out.find("wagon"), std::string::npos);
  const CliResult g = run("gen --n 5 --connected --free P5,K3");
  EXPECT_EQ(g.status, 0);
  const long lines = std::count(g.out.begin(), g.out.end(), '\n');
  EXPECT_GT(lines, 0);
  const CliResult counted = run("verify --target chi-p5-k3 --n-min 5 --n 5 --connected");
  EXPECT_NE(counted.out.find(": " + std::to_string(lines) + " checked of " + std::to_string(lines) + " members"),
            std::string::npos)
      << counted.out;
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify --target nope --n 5").status, 2);
  EXPECT_EQ(run("verify --target chi-p5-k23 --n 12").status, 2);
  EXPECT_EQ(run("verify --target chi-p5-k23").status, 2);
  EXPECT_EQ(run("color --pipeline p5-k23 --g6 A").status, 2);
  EXPECT_EQ(run("color --pipeline nope --g6 Dhc").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

}  // namespace
