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

#include <algorithm>
#include <random>

#include "chibind/errors.hpp"
#include "chibind/invariants.hpp"
#include "chibind/patterns.hpp"
#include "chibind/structure.hpp"
#include "oracles.hpp"

namespace chibind {
namespace {

// C5 on 0..4 plus extra vertices with the given hole neighbours (1-based).
Graph hole_with(const std::vector<std::vector<int>>& extras, std::vector<std::pair<int, int>> more = {}) {
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  int x = 5;
  for (const auto& seen : extras) {
    for (int i : seen) e.emplace_back(i - 1, x);
    ++x;
  }
  for (auto [u, v] : more) x = std::max({x, u + 1, v + 1});
  e.insert(e.end(), more.begin(), more.end());
  return from_edge_list(x, e);
}

Graph random_member(std::mt19937_64& rng, int n, std::initializer_list<std::string_view> free_of, double p) {
  for (;;) {
    const Graph g = oracle::random_graph(rng, n, p);
    if (is_free(g, free_of)) return g;
  }
}

TEST(FiveHole, Search) {
  const auto h = find_five_hole(cycle_graph(5));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, (Hole5{0, 1, 2, 3, 4}));
  EXPECT_EQ(find_five_hole(hole_with({{1, 2, 3, 4, 5}})), (Hole5{0, 1, 2, 3, 4}));
  EXPECT_FALSE(find_five_hole(complete_bipartite(3, 3)).has_value());
}

TEST(FiveHole, ClassesAndLevels) {
  const Graph g = hole_with({{1, 3}, {1, 2, 3, 4, 5}}, {{6, 7}});
  const FiveHoleDecomposition d = decompose_five_hole(g, {0, 1, 2, 3, 4});
  EXPECT_EQ(d.cls({1, 3}), VertexSet{5});
  EXPECT_EQ(d.all_five(), VertexSet{6});
  EXPECT_EQ(d.level(1), (VertexSet{5, 6}));
  EXPECT_EQ(d.level(2), VertexSet{7});
  EXPECT_TRUE(d.unreachable.empty());

  const FiveHoleDecomposition bare = decompose_five_hole(cycle_graph(5), {0, 1, 2, 3, 4});
  for (VertexSet c : bare.classes) EXPECT_TRUE(c.empty());
  EXPECT_TRUE(bare.levels.empty() || bare.level(1).empty());

  EXPECT_THROW(decompose_five_hole(complete_graph(5), {0, 1, 2, 3, 4}), PreconditionError);
}

TEST(FiveHole, IndexArithmeticWrapsModFive) {
  using D = FiveHoleDecomposition;
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(D::mask({k, k + 2}), D::mask({k + 2, k + 5}));
    EXPECT_EQ(D::mask({k, k + 2, k + 3}), D::mask({k + 2, k + 3, k + 5}));
  }
  EXPECT_TRUE(is_admissible_class(D::mask({1, 3})));
  EXPECT_FALSE(is_admissible_class(D::mask({1})));
  EXPECT_FALSE(is_admissible_class(D::mask({1, 2})));
}

TEST(FiveHole, PartitionOnRandomGraphs) {
  std::mt19937_64 rng(17);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 5), 0.4);
    for (const Hole5& h : all_five_holes(g)) {
      ++seen;
      const FiveHoleDecomposition d = decompose_five_hole(g, h, false);
      VertexSet all = d.hole_set() | d.unreachable;
      for (VertexSet c : d.classes) {
        EXPECT_FALSE(all.intersects(c));
        all |= c;
      }
      EXPECT_EQ(all | (g.vertices() - d.level(1) - d.hole_set() - d.unreachable), g.vertices());
      VertexSet levels;
      for (VertexSet l : d.levels) {
        EXPECT_FALSE(levels.intersects(l));
        levels |= l;
      }
      EXPECT_EQ(levels | d.hole_set() | d.unreachable, g.vertices());
      for (int x : d.level(1)) {
        int m = 0;
        for (int i = 1; i <= 5; ++i) m |= g.adjacent(x, d.v(i)) ? 1 << (i - 1) : 0;
        EXPECT_TRUE(d.classes[static_cast<std::size_t>(m)].contains(x));
      }
    }
  }
  EXPECT_GT(seen, 20);
}

TEST(FiveHole, ProvedChecksHoldOnRandomMembers) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_member(rng, 9, {"P5", "K2,3"}, 0.55);
    for (const Hole5& h : all_five_holes(g)) {
      const FiveHoleDecomposition d = decompose_five_hole(g, h, false);
      EXPECT_TRUE(check_p5_hole_lemma(g, d).empty()) << describe(g);
      EXPECT_TRUE(check_k23_hole_lemma(g, d).empty()) << describe(g);
    }
  }
}

TEST(FiveHole, SCliquesCoverTheirClasses) {
  const Graph g = hole_with({{2, 5}});
  ASSERT_TRUE(is_free(g, {"P5", "K2,3"}));
  const FiveHoleDecomposition d = decompose_five_hole(g, {0, 1, 2, 3, 4});
  const auto s = s_cliques(d);
  EXPECT_EQ(s[0], VertexSet{5});
  EXPECT_TRUE(check_k23_hole_lemma(g, d).empty());

  // On random members the cliques are disjoint cliques covering every hole
  // neighbour outside the all-five and consecutive-triple classes.
  std::mt19937_64 rng(29);
  int tested = 0;
  while (tested < 150) {
    const Graph h = random_member(rng, 9, {"P5", "K2,3"}, 0.45);
    const auto hole = find_five_hole(h);
    if (!hole) continue;
    ++tested;
    const FiveHoleDecomposition dh = decompose_five_hole(h, *hole);
    VertexSet expected = dh.level(1) - dh.all_five();
    for (int i = 1; i <= 5; ++i) expected -= dh.cls({i, i + 1, i + 2});
    VertexSet covered;
    for (VertexSet si : s_cliques(dh)) {
      EXPECT_TRUE(is_clique(h, si)) << describe(h);
      EXPECT_FALSE(covered.intersects(si));
      covered |= si;
    }
    EXPECT_EQ(covered, expected) << describe(h);
  }
}

TEST(BadPair, Shapes) {
  const Graph g = hole_with({{1, 2, 4}, {1, 2, 3, 5}, {1, 3}, {1, 3}});
  const FiveHoleDecomposition d = decompose_five_hole(g, {0, 1, 2, 3, 4});
  EXPECT_TRUE(is_bad_pair(g, d, 5, 6));
  EXPECT_TRUE(is_bad_pair(g, d, 6, 5));
  EXPECT_FALSE(is_bad_pair(g, d, 7, 8));
  const Graph joined = hole_with({{1, 2, 4}, {1, 2, 3, 5}}, {{5, 6}});
  const FiveHoleDecomposition dj = decompose_five_hole(joined, {0, 1, 2, 3, 4});
  EXPECT_THROW(is_bad_pair(joined, dj, 5, 6), PreconditionError);
}

TEST(HomogeneousSet, Examples) {
  EXPECT_EQ(find_homogeneous_set(complete_bipartite(2, 3)), (VertexSet{0, 1}));
  EXPECT_FALSE(find_homogeneous_set(path_graph(4)).has_value());
  EXPECT_FALSE(find_homogeneous_set(cycle_graph(5)).has_value());
}

TEST(HomogeneousSet, MatchesExhaustiveScan) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.5);
    EXPECT_EQ(find_homogeneous_set(g), oracle::homogeneous_set(g)) << describe(g);
  }
}

TEST(Cutsets, CliqueCutsetExamples) {
  const auto p3 = find_clique_cutset(path_graph(3));
  ASSERT_TRUE(p3.has_value());
  EXPECT_EQ(p3->cutset, VertexSet{1});
  EXPECT_EQ(p3->kind, CutsetKind::clique);
  EXPECT_EQ(p3->side_components.size(), 2U);
  EXPECT_FALSE(find_clique_cutset(cycle_graph(5)).has_value());
  EXPECT_FALSE(find_clique_cutset(complete_graph(4)).has_value());
  EXPECT_THROW(find_clique_cutset(empty_graph(2)), PreconditionError);
}

TEST(Cutsets, MinimalCutsetsOfFiveCycle) {
  std::vector<VertexSet> got;
  for (const CutsetReport& r : minimal_cutsets(cycle_graph(5))) {
    EXPECT_EQ(r.kind, CutsetKind::minimal);
    got.push_back(r.cutset);
  }
  std::sort(got.begin(), got.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  EXPECT_EQ(got, oracle::minimal_separators(cycle_graph(5)));
  EXPECT_EQ(got.size(), 5U);
  for (VertexSet s : got) {
    EXPECT_EQ(s.size(), 2);
    EXPECT_FALSE(cycle_graph(5).adjacent(s.min(), s.max()));
  }
  EXPECT_TRUE(minimal_cutsets(complete_graph(4)).empty());
}

TEST(Cutsets, MinimalCutsetsMatchExhaustiveScan) {
  std::mt19937_64 rng(43);
  int tested = 0;
  while (tested < 150) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.45);
    if (!is_connected(g)) continue;
    ++tested;
    std::vector<VertexSet> got;
    for (const CutsetReport& r : minimal_cutsets(g)) {
      got.push_back(r.cutset);
      EXPECT_GE(r.side_components.size(), 2U);
    }
    std::sort(got.begin(), got.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    EXPECT_EQ(got, oracle::minimal_separators(g)) << describe(g);
    if (auto c = find_clique_cutset(g)) {
      EXPECT_TRUE(is_clique(g, c->cutset));
      EXPECT_FALSE(oracle::connected(g, g.vertices() - c->cutset));
    }
  }
}

TEST(Dominating, Examples) {
  const DominatingSet k1 = find_dominating_clique_or_p3(complete_graph(1));
  EXPECT_EQ(k1.kind, DominatingKind::clique);
  EXPECT_EQ(k1.set, VertexSet{0});

  const DominatingSet c5 = find_dominating_clique_or_p3(cycle_graph(5));
  EXPECT_EQ(c5.kind, DominatingKind::p3);
  ASSERT_EQ(c5.order.size(), 3U);
  const Graph c = cycle_graph(5);
  EXPECT_TRUE(c.adjacent(c5.order[0], c5.order[1]));
  EXPECT_TRUE(c.adjacent(c5.order[1], c5.order[2]));
  EXPECT_FALSE(c.adjacent(c5.order[0], c5.order[2]));

  const DominatingSet star = find_dominating_clique_or_p3(complete_bipartite(1, 3));
  EXPECT_EQ(star.kind, DominatingKind::clique);
  EXPECT_EQ(star.set, VertexSet{0});

  EXPECT_THROW(find_dominating_clique_or_p3(path_graph(5)), PreconditionError);
  EXPECT_THROW(find_dominating_clique_or_p3(empty_graph(2)), PreconditionError);
}

TEST(Dominating, OutputDominatesOnRandomMembers) {
  std::mt19937_64 rng(47);
  int tested = 0;
  while (tested < 100) {
    const Graph g = random_member(rng, 4 + static_cast<int>(rng() % 7), {"P5"}, 0.5);
    if (!is_connected(g)) continue;
    ++tested;
    const DominatingSet d = find_dominating_clique_or_p3(g);
    EXPECT_EQ(d.set | neighborhood_of(g, d.set), g.vertices());
    if (d.kind == DominatingKind::clique) EXPECT_TRUE(is_clique(g, d.set));
    if (d.kind == DominatingKind::p3) EXPECT_TRUE(oracle::induces(induced(g, d.set), path_graph(3)));
  }
}

TEST(CutsetCheck, Octahedron) {
  const Graph oct = complement(disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2)));
  ASSERT_TRUE(is_free(oct, {"P5", "C5", "K2,3"}));
  EXPECT_TRUE(check_c5_cutset_lemma(oct).empty());
  EXPECT_THROW(check_c5_cutset_lemma(path_graph(3)), PreconditionError);
}

TEST(SecondLevel, SplitsIntoTwoTriangleFreeParts) {
  // Hole plus an all-five vertex 5 with two pendant-ish N^2 vertices.
  const Graph g = hole_with({{1, 2, 3, 4, 5}}, {{5, 6}, {5, 7}});
  const FiveHoleDecomposition d = decompose_five_hole(g, {0, 1, 2, 3, 4});
  const SecondLevelSplit s = split_second_level(g, d);
  EXPECT_TRUE(s.problems.empty());
  EXPECT_EQ(s.a | s.b, (VertexSet{6, 7}));
  EXPECT_FALSE(s.a.intersects(s.b));
}

TEST(Antihole, DecompositionAroundSevenAntihole) {
  // complement(C7) plus a vertex complete to it.
  Graph a = complement(cycle_graph(7));
  const Graph g = join(a, complete_graph(1));
  const auto cycle = find_long_odd_antihole(g);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->size(), 7U);
  const AntiholeDecomposition d = decompose_odd_antihole(g, *cycle);
  EXPECT_EQ(d.s, VertexSet{7});
  EXPECT_TRUE(d.t.empty());
  EXPECT_TRUE(d.beyond.empty());
  EXPECT_FALSE(find_long_odd_antihole(cycle_graph(5)).has_value());
}

}  // namespace
}  // namespace chibind
