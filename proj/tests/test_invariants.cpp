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

#include <random>

#include "chibind/enumerate.hpp"
#include "chibind/errors.hpp"
#include "chibind/invariants.hpp"
#include "chibind/patterns.hpp"
#include "oracles.hpp"

namespace chibind {
namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_edge_list(10, e);
}

const Graph& k1_k1k3() { return pattern("K1+(K1uK3)").graph; }

// Perfect-divisibility straight from the definition, using oracle perfection.
bool divisible_by_definition(const Graph& g) {
  const auto chi = oracle::chromatic_table(g);
  const auto omega = oracle::clique_table(g);
  const std::uint32_t full = (1U << g.order()) - 1;
  std::vector<bool> perfect(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool ok = true;
    for (std::uint32_t t = s;; t = (t - 1) & s) {
      ok = ok && chi[t] == omega[t];
      if (t == 0) break;
    }
    perfect[s] = ok;
  }
  for (std::uint32_t s = 1; s <= full; ++s) {
    bool found = false;
    for (std::uint32_t a = s;; a = (a - 1) & s) {
      if (perfect[a] && omega[s & ~a] < omega[s]) found = true;
      if (a == 0 || found) break;
    }
    if (!found) return false;
  }
  return true;
}

// Some A with G[A] perfect and omega(G - A) < omega(G), by subset scan.
bool division_exists(const Graph& g) {
  const std::uint32_t full = (1U << g.order()) - 1;
  const int w = oracle::clique_number(g);
  for (std::uint32_t a = 0; a <= full; ++a) {
    if (oracle::clique_number(induced(g, VertexSet(full & ~a))) < w &&
        oracle::perfect_by_definition(induced(g, VertexSet(a)))) {
      return true;
    }
  }
  return false;
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(cycle_graph(5)), 2);
  EXPECT_EQ(clique_number(complete_bipartite(2, 3)), 2);
  EXPECT_EQ(clique_number(k1_k1k3()), 4);
  EXPECT_EQ(clique_number(Graph(0)), 0);
  EXPECT_TRUE(is_clique(petersen(), maximum_clique(petersen())));
}

TEST(IndependenceNumber, Examples) {
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(complete_bipartite(2, 3)), 3);
  EXPECT_EQ(independence_number(pattern("2K2").graph), 2);
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)).chi, 3);
  EXPECT_EQ(chromatic_number(complete_bipartite(2, 3)).chi, 2);
  const ChromaticResult p = chromatic_number(petersen());
  EXPECT_EQ(p.chi, 3);
  EXPECT_TRUE(is_proper(petersen(), p.coloring));
  EXPECT_EQ(oracle::chromatic_number(petersen()), 3);
  EXPECT_EQ(chromatic_number(Graph(0)).chi, 0);
}

TEST(ChromaticNumber, AgreesWithSubsetDpOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    GraphStream s = generate(n, false);
    while (auto g = s.next()) {
      const ChromaticResult r = chromatic_number(*g);
      ASSERT_EQ(r.chi, oracle::chromatic_number(*g)) << describe(*g);
      ASSERT_TRUE(is_proper(*g, r.coloring));
      ASSERT_EQ(r.coloring.used(), r.chi);
      ASSERT_EQ(clique_number(*g), oracle::clique_number(*g));
    }
  }
}

TEST(ChromaticNumber, BasicInequalitiesOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
    const int chi = chromatic_number(g).chi;
    EXPECT_LE(clique_number(g), chi);
    EXPECT_LE(chi, n);
    EXPECT_GE(independence_number(g) * chi, n);
    if (is_perfect(g)) EXPECT_EQ(chi, clique_number(g));
    const Coloring d = dsatur_coloring(g);
    EXPECT_TRUE(is_proper(g, d));
    EXPECT_GE(d.used(), chi);
    if (n <= 10) EXPECT_EQ(chi, oracle::chromatic_number(g));
  }
}

TEST(Coloring, ProperAndCompact) {
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(is_proper(p3, Coloring{{4, 1, 4}, 5}));
  EXPECT_FALSE(is_proper(p3, Coloring{{0, 0, 1}, 2}));
  const Coloring c = compact(Coloring{{4, 1, 4}, 5});
  EXPECT_EQ(c.colors, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(c.k, 2);
}

void expect_valid_division(const Graph& g, const PerfectDivision& d) {
  EXPECT_EQ(d.a | d.b, g.vertices());
  EXPECT_FALSE(d.a.intersects(d.b));
  EXPECT_TRUE(oracle::perfect_by_definition(induced(g, d.a)));
  EXPECT_EQ(d.omega_g, oracle::clique_number(g));
  EXPECT_EQ(d.omega_b, oracle::clique_number(induced(g, d.b)));
  EXPECT_LT(d.omega_b, d.omega_g);
}

TEST(PerfectDivision, Examples) {
  const auto c5 = find_perfect_division(cycle_graph(5));
  ASSERT_TRUE(c5.has_value());
  expect_valid_division(cycle_graph(5), *c5);
  EXPECT_EQ(c5->a.size(), 4);

  const auto p4 = find_perfect_division(path_graph(4));
  ASSERT_TRUE(p4.has_value());
  EXPECT_EQ(p4->a, VertexSet::first(4));
  EXPECT_TRUE(p4->b.empty());

  const auto edgeless = find_perfect_division(empty_graph(3));
  ASSERT_TRUE(edgeless.has_value());
  EXPECT_EQ(edgeless->a, VertexSet::first(3));

  const Graph c7bar = complement(cycle_graph(7));
  const auto d = find_perfect_division(c7bar);
  EXPECT_EQ(d.has_value(), division_exists(c7bar));
  if (d) expect_valid_division(c7bar, *d);
}

TEST(PerfectDivision, DivisibilityAgreesWithDefinition) {
  for (int n = 1; n <= 6; ++n) {
    GraphStream s = generate(n, false);
    while (auto g = s.next()) ASSERT_EQ(is_perfectly_divisible(*g), divisible_by_definition(*g)) << describe(*g);
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 7, 0.5);
    ASSERT_EQ(is_perfectly_divisible(g), divisible_by_definition(g)) << describe(g);
    if (auto d = find_perfect_division(g)) expect_valid_division(g, *d);
  }
}

TEST(PerfectDivision, DivisibilityIsHereditary) {
  std::mt19937_64 rng(11);
  int seen = 0;
  for (int trial = 0; trial < 300 && seen < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 0.55);
    if (!is_perfectly_divisible(g)) continue;
    ++seen;
    for (int k = 0; k < 5; ++k) EXPECT_TRUE(is_perfectly_divisible(induced(g, VertexSet(rng() & 0xFF))));
  }
  EXPECT_GT(seen, 0);
}

TEST(PerfectDivision, Capacity) {
  EXPECT_THROW(is_perfectly_divisible(empty_graph(kDivisibilityMaxOrder + 1)), PreconditionError);
  EXPECT_THROW(find_perfect_division(empty_graph(kDivisionMaxOrder + 1)), PreconditionError);
}

TEST(ChiBoundDivisible, Examples) {
  const ChromaticResult c5 = chi_bound_divisible(cycle_graph(5));
  EXPECT_LE(c5.chi, 3);
  EXPECT_TRUE(is_proper(cycle_graph(5), c5.coloring));
  EXPECT_EQ(chi_bound_divisible(complete_graph(4)).chi, 4);
}

TEST(ChiBoundDivisible, RandomClassMembersStayWithinBinomialBound) {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int trial = 0; trial < 3000 && seen < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 5), 0.6);
    if (!is_free(g, {"P5", "C5", "K2,3"})) continue;
    ++seen;
    const int w = clique_number(g);
    const ChromaticResult r = chi_bound_divisible(g);
    EXPECT_TRUE(is_proper(g, r.coloring));
    EXPECT_LE(r.coloring.used(), w * (w + 1) / 2);
    EXPECT_GE(r.coloring.used(), chromatic_number(g).chi);
  }
  EXPECT_GT(seen, 10);
}

}  // namespace
}  // namespace chibind
