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
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "chibind/enumerate.hpp"
#include "chibind/errors.hpp"
#include "oracles.hpp"

namespace chibind {
namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(encode_graph6(complete_graph(1)), "@");
  EXPECT_EQ(encode_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(encode_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(decode_graph6("A_\n"), complete_graph(2));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(decode_graph6(""), PreconditionError);
  EXPECT_THROW(decode_graph6("A"), PreconditionError);
  EXPECT_THROW(decode_graph6("A__"), PreconditionError);
  EXPECT_THROW(decode_graph6("A "), PreconditionError);
  EXPECT_THROW(decode_graph6("A\x80"), PreconditionError);
  EXPECT_THROW(decode_graph6("~?@"), PreconditionError);
  EXPECT_THROW(decode_graph6("A`"), PreconditionError);  // nonzero padding
  EXPECT_THROW(encode_graph6(Graph(63)), PreconditionError);
}

TEST(Graph6, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 63), 0.3);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm)));
    EXPECT_EQ(adjacency_code(canonical_form(g)), canonical_code(g));
  }
}

TEST(Canonical, SeparatesExactlyTheIsomorphismClasses) {
  // Two graphs share a code iff the brute-force minimum over all
  // relabellings agrees. Sparse orders and equal edge counts give many
  // isomorphic and near-isomorphic pairs.
  std::mt19937_64 rng(71);
  int same = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    if (a.size() != b.size()) continue;
    const bool iso = oracle::canonical_code(a) == oracle::canonical_code(b);
    same += iso ? 1 : 0;
    EXPECT_EQ(canonical_code(a) == canonical_code(b), iso) << describe(a) << " vs " << describe(b);
  }
  EXPECT_GT(same, 20);
  // Highly symmetric inputs exercise the twin pruning.
  for (const Graph& g : {complete_graph(7), empty_graph(7), cycle_graph(7), complete_bipartite(3, 4)}) {
    EXPECT_EQ(canonical_form(g).size(), g.size());
    EXPECT_EQ(oracle::canonical_code(canonical_form(g)), oracle::canonical_code(g));
  }
  EXPECT_THROW(canonical_code(Graph(12)), PreconditionError);
}

TEST(Generate, ConnectedCountsMatchLabelledOracle) {
  const int expected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const int count = static_cast<int>(generate(n, true).collect().size());
    EXPECT_EQ(count, expected[n - 1]);
    EXPECT_EQ(count, oracle::count_connected_classes(n));
  }
}

TEST(Generate, AllGraphCountsAndNoDuplicates) {
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) {
    const auto graphs = generate(n, false).collect();
    EXPECT_EQ(graphs.size(), all[n]);
    std::set<std::uint64_t> codes;
    for (const Graph& g : graphs) codes.insert(oracle::canonical_code(g.order() <= 7 ? g : Graph(0)));
    if (n <= 7) EXPECT_EQ(codes.size(), graphs.size());
  }
  EXPECT_THROW(generate(11, false), PreconditionError);
  EXPECT_THROW(generate(-1, false), PreconditionError);
}

TEST(Generate, AscendingCanonicalOrderAndRoundTrip) {
  const auto& codes = canonical_codes(8);
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  GraphStream s = generate(8, false);
  std::size_t i = 0;
  while (auto g = s.next()) {
    ASSERT_EQ(adjacency_code(*g), codes[i++]);
    ASSERT_EQ(canonical_code(*g), adjacency_code(*g));
    ASSERT_EQ(decode_graph6(encode_graph6(*g)), *g);
  }
}

TEST(Filter, FreeOfAndPredicates) {
  const auto five = filter_stream(generate(5, true), {"P5", "K3"}).collect();
  bool has_c5 = false;
  for (const Graph& g : five) {
    has_c5 = has_c5 || canonical_code(g) == canonical_code(cycle_graph(5));
    EXPECT_NE(canonical_code(g), canonical_code(path_graph(5)));
  }
  EXPECT_TRUE(has_c5);
  EXPECT_EQ(filter_stream(generate(5, true), {}).collect().size(), 21U);
  EXPECT_THROW(filter_stream(generate(5, true), {"XYZ"}), PreconditionError);

  StreamFilter f;
  f.omega_min = 3;
  f.omega_max = 3;
  for (const Graph& g : filter_stream(generate(5, false), {}, f).collect()) EXPECT_EQ(oracle::clique_number(g), 3);
}

TEST(Filter, MembershipIsHereditary) {
  std::mt19937_64 rng(73);
  const auto members = filter_stream(generate(7, false), {"P5", "C5", "K2,3"}).collect();
  std::size_t expected = 0;
  for (const Graph& g : generate(7, false).collect()) {
    if (!oracle::induces(g, path_graph(5)) && !oracle::induces(g, cycle_graph(5)) &&
        !oracle::induces(g, complete_bipartite(2, 3))) {
      ++expected;
    }
  }
  EXPECT_EQ(members.size(), expected);
  for (int k = 0; k < 100; ++k) {
    const Graph& g = members[rng() % members.size()];
    const Graph h = induced(g, VertexSet(rng() & g.vertices().bits()));
    EXPECT_TRUE(is_free(h, {"P5", "C5", "K2,3"}));
  }
}

TEST(Files, ReadsGraph6Lines) {
  const std::string path = ::testing::TempDir() + "chibind_graphs.g6";
  {
    std::ofstream out(path);
    out << ">>graph6<<Dhc\n\nA_\r\n@\n";
  }
  const auto graphs = read_graph6_file(path).collect();
  ASSERT_EQ(graphs.size(), 3U);
  EXPECT_EQ(graphs[0], cycle_graph(5));
  EXPECT_EQ(graphs[1], complete_graph(2));
  {
    std::ofstream out(path);
    out << "Dhc\nnot-a-graph\n";
  }
  GraphStream bad = read_graph6_file(path);
  EXPECT_NO_THROW(bad.next());
  EXPECT_THROW(bad.next(), PreconditionError);
  std::remove(path.c_str());
  EXPECT_THROW(read_graph6_file(path + ".missing"), PreconditionError);
}

}  // namespace
}  // namespace chibind
