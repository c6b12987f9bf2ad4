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

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chibind {

/// Hard cap on graph order: one adjacency row and one vertex set per machine
/// word.
inline constexpr int kMaxVertices = 64;

/// A set of vertices 0..63 packed in a single word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  /// {0, ..., n-1}.
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(const std::vector<int>& members);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{0,3,4}"
  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Orders sets by their ascending member lists, lexicographically; a proper
  /// prefix sorts first.
  static bool lex_less(VertexSet a, VertexSet b);

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Vertices are 0..n-1 and every derived object (induced subgraphs,
/// certificates, search results) is defined relative to that order.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const;  // number of edges
  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }
  std::vector<std::pair<int, int>> edges() const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  /// Adjacency equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
  std::string label_;
};

/// Mutable staging area for building a Graph without per-edge validation
/// round-trips. Used internally and by tests.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  GraphBuilder& set_neighbors(int v, VertexSet nbrs);
  int order() const { return n_; }
  Graph build() &&;
  Graph build() const&;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Builds a graph from an explicit edge list. Throws PreconditionError on an
/// endpoint >= n, a loop, or n outside [0, 64].
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

/// Checks that s only names vertices of g; throws PreconditionError otherwise.
void require_bound(const Graph& g, VertexSet s);

/// G[s], relabelled by ascending original index.
Graph induced(const Graph& g, VertexSet s);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

// Small named constructors used all over the tests and the pattern catalog.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int p, int q);

std::vector<VertexSet> components(const Graph& g);
/// Components of G[s], as subsets of V(g).
std::vector<VertexSet> components_within(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);

/// Hop distance from the nearest member of s; nullopt means unreachable.
std::vector<std::optional<int>> distances_from(const Graph& g, VertexSet s);

/// Union of N(v) over v in s.
VertexSet neighborhood_of(const Graph& g, VertexSet s);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
/// Both require disjoint x and y (PreconditionError otherwise). Empty sets are
/// vacuously complete and anticomplete to everything.
bool is_complete_to(const Graph& g, VertexSet x, VertexSet y);
bool is_anticomplete_to(const Graph& g, VertexSet x, VertexSet y);

/// "n=5 edges=[0-1,1-2,...]" for diagnostics.
std::string describe(const Graph& g);

}  // namespace chibind
