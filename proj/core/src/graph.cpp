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

#include "chibind/graph.hpp"

#include <algorithm>
#include <sstream>

#include "chibind/errors.hpp"

namespace chibind {

namespace {

void require_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) bits_ |= std::uint64_t{1} << v;
}

VertexSet VertexSet::of(const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) s = s.with(v);
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool VertexSet::lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

Graph::Graph(int n) {
  require_order(n);
  n_ = n;
  rows_.assign(static_cast<std::size_t>(n), 0);
}

int Graph::size() const {
  int twice = 0;
  for (auto row : rows_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  require_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  return *this;
}

GraphBuilder& GraphBuilder::set_neighbors(int v, VertexSet nbrs) {
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    if (nbrs.contains(u)) {
      add_edge(u, v);
    } else {
      remove_edge(u, v);
    }
  }
  return *this;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.rows_ = std::move(rows_);
  return g;
}

Graph GraphBuilder::build() const& {
  Graph g;
  g.n_ = n_;
  g.rows_ = rows_;
  return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  require_order(n);
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + "-" +
                              std::to_string(v) + " with n=" + std::to_string(n));
    }
    if (u == v) throw PreconditionError("loop edge at vertex " + std::to_string(u));
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

void require_bound(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw PreconditionError("vertex set " + s.to_string() + " is not bound to a graph on " +
                            std::to_string(g.order()) + " vertices");
  }
}

Graph induced(const Graph& g, VertexSet s) {
  require_bound(g, s);
  std::vector<int> members = s.to_vector();
  const int k = static_cast<int>(members.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)])) {
        b.add_edge(i, j);
      }
    }
  }
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.set_neighbors(v, (all - g.neighbors(v)).without(v));
  return std::move(b).build();
}

namespace {

Graph combine(const Graph& g1, const Graph& g2, bool cross) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > kMaxVertices) {
    throw PreconditionError("combined order " + std::to_string(n1 + n2) + " exceeds 64");
  }
  GraphBuilder b(n1 + n2);
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(u + n1, v + n1);
  if (cross) {
    for (int u = 0; u < n1; ++u) {
      for (int v = 0; v < n2; ++v) b.add_edge(u, v + n1);
    }
  }
  return std::move(b).build();
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) { return combine(g1, g2, false); }
Graph join(const Graph& g1, const Graph& g2) { return combine(g1, g2, true); }

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph complete_graph(int n) { return complement(empty_graph(n)); }
Graph empty_graph(int n) { return Graph(n); }
Graph complete_bipartite(int p, int q) { return join(empty_graph(p), empty_graph(q)); }

std::vector<VertexSet> components_within(const Graph& g, VertexSet s) {
  require_bound(g, s);
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = neighborhood_of(g, frontier) & rest;
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::optional<int>> distances_from(const Graph& g, VertexSet s) {
  require_bound(g, s);
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  VertexSet seen = s;
  VertexSet frontier = s;
  int level = 0;
  while (!frontier.empty()) {
    for (int v : frontier) dist[static_cast<std::size_t>(v)] = level;
    frontier = neighborhood_of(g, frontier) - seen;
    seen |= frontier;
    ++level;
  }
  return dist;
}

VertexSet neighborhood_of(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

bool is_clique(const Graph& g, VertexSet s) {
  require_bound(g, s);
  for (int v : s) {
    if (!s.without(v).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  require_bound(g, s);
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

namespace {

void require_disjoint(const Graph& g, VertexSet x, VertexSet y) {
  require_bound(g, x);
  require_bound(g, y);
  if (x.intersects(y)) {
    throw PreconditionError("sets " + x.to_string() + " and " + y.to_string() + " overlap");
  }
}

}  // namespace

bool is_complete_to(const Graph& g, VertexSet x, VertexSet y) {
  require_disjoint(g, x, y);
  for (int v : x) {
    if (!y.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_anticomplete_to(const Graph& g, VertexSet x, VertexSet y) {
  require_disjoint(g, x, y);
  for (int v : x) {
    if (g.neighbors(v).intersects(y)) return false;
  }
  return true;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ',';
    os << u << '-' << v;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace chibind
