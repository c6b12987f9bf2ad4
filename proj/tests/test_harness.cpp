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

#include <cstdio>

#include "json.hpp"

#include "chibind/enumerate.hpp"
#include "chibind/errors.hpp"
#include "chibind/harness.hpp"

namespace chibind {
namespace {

VerifyOptions options(const std::string& target, int n, int threads) {
  VerifyOptions o;
  o.target = target;
  o.n_max = n;
  o.threads = threads;
  return o;
}

TEST(Targets, CatalogIsWellFormed) {
  const auto& targets = verification_targets();
  EXPECT_EQ(targets.size(), 17U);
  for (const TargetInfo& t : targets) {
    EXPECT_FALSE(t.statement.empty()) << t.id;
    EXPECT_GE(t.n_cap, 10) << t.id;
    EXPECT_EQ(verification_target(t.id).statement, t.statement);
  }
  EXPECT_THROW(verification_target("no-such-target"), PreconditionError);
  EXPECT_THROW(verify(options("no-such-target", 5, 1)), PreconditionError);
}

TEST(Verify, RejectsOrdersAboveTheCap) {
  EXPECT_THROW(verify(options("chi-p5-k23", 11, 1)), PreconditionError);
  EXPECT_THROW(verify(options("divisible-alpha2", 14, 1)), PreconditionError);
}

TEST(Verify, CountsMatchAFilteredStream) {
  const VerificationReport r = verify(options("chi-2k2", 6, 1));
  EXPECT_TRUE(r.ok());
  long graphs = 0;
  long members = 0;
  for (int n = 1; n <= 6; ++n) {
    graphs += static_cast<long>(generate(n, false).collect().size());
    members += static_cast<long>(filter_stream(generate(n, false), {"2K2"}).collect().size());
  }
  EXPECT_EQ(r.graphs, graphs);
  EXPECT_EQ(r.members, members);
  EXPECT_EQ(r.checked, members);
}

TEST(Verify, FiveCycleIsTheTightWitnessAtOmegaTwo) {
  const VerificationReport r = verify(options("chi-p5-k23", 6, 1));
  ASSERT_TRUE(r.ok());
  bool found = false;
  for (const Extreme& e : r.extremes) {
    if (e.quantity != "chi" || e.omega != 2) continue;
    found = true;
    EXPECT_EQ(e.value, 3);
    EXPECT_EQ(e.bound, 3);
    EXPECT_EQ(canonical_code(decode_graph6(e.witness)), canonical_code(cycle_graph(5)));
  }
  EXPECT_TRUE(found);
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["target"], "chi-p5-k23");
  EXPECT_EQ(j["counts"]["violations"], 0);
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_TRUE(nlohmann::json::parse(r.to_json(true)).contains("seconds"));
}

TEST(Verify, JsonIsIdenticalAcrossThreadCounts) {
  for (const char* target : {"chi-p5-k1-k1uk3", "hole-p5", "divisible-p5-c5-k23"}) {
    const std::string one = verify(options(target, 7, 1)).to_json();
    const std::string four = verify(options(target, 7, 4)).to_json();
    EXPECT_EQ(one, four) << target;
  }
}

TEST(Verify, ReadsGraphsFromAFile) {
  const std::string path = ::testing::TempDir() + "chibind_verify.g6";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    ASSERT_NE(f, nullptr);
    std::fputs("Dhc\nA_\nD?{\n", f);  // C5, K2, K1,4
    std::fclose(f);
  }
  VerifyOptions o;
  o.target = "chi-p5-k3";
  o.input_path = path;
  o.threads = 1;
  const VerificationReport r = verify(o);
  EXPECT_EQ(r.graphs, 3);
  EXPECT_EQ(r.members, 3);
  EXPECT_TRUE(r.ok());
  std::remove(path.c_str());
}

TEST(Render, ColorAndAnalyze) {
  const RenderedOutput c = color_one(cycle_graph(5), "p5-k23");
  EXPECT_NE(c.text.find("colors used: 3 (bound 3"), std::string::npos);
  const auto cj = nlohmann::json::parse(c.json);
  EXPECT_EQ(cj["certificate"]["colors_used"], 3);
  EXPECT_THROW(color_one(path_graph(5), "p5-k23"), PreconditionError);

  const RenderedOutput a = analyze_one(complete_bipartite(2, 3));
  EXPECT_NE(a.text.find("homogeneous set {0,1}"), std::string::npos) << a.text;
  EXPECT_TRUE(nlohmann::json::accept(a.json));
}

}  // namespace
}  // namespace chibind
