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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

/// A named small graph. Catalog names are stable identifiers used on the
/// command line, e.g. "P5", "K2,3", "K1+2K2", "K1+(K1uK3)".
struct Pattern {
  std::string name;
  Graph graph;
  /// Set for shapes whose exact drawing is a convention of this library
  /// rather than fixed by the class definitions it serves (currently banner).
  bool externally_defined = false;
};

/// pattern vertex i -> host vertex map[i]; injective, induced.
struct Embedding {
  std::vector<int> map;

  VertexSet image() const { return VertexSet::of(map); }
  std::string to_string() const;
};

/// The full forbidden-configuration catalog in a fixed order.
const std::vector<Pattern>& pattern_catalog();

/// Catalog lookup; throws PreconditionError for an unknown name.
const Pattern& pattern(std::string_view name);

/// Splits "P5,K2,3,K1+2K2" into catalog patterns. Commas inside names such as
/// "K2,3" are resolved by longest catalog match.
std::vector<Pattern> parse_pattern_list(std::string_view list);

/// Lexicographically least induced embedding of `pattern` into `host`, where
/// pattern vertices are placed in index order and host candidates are tried
/// ascending.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

bool is_free(const Graph& host, std::span<const Pattern> patterns);
/// Convenience overload taking catalog names.
bool is_free(const Graph& host, std::initializer_list<std::string_view> names);

/// First catalog pattern (in the given order) that host induces, with its
/// embedding.
struct PatternHit {
  std::string name;
  Embedding embedding;
};
std::optional<PatternHit> first_induced(const Graph& host, std::span<const Pattern> patterns);

/// Ordered induced cycle v0 v1 ... v(L-1) with v0 its smallest vertex and
/// v1 < v(L-1); the lexicographically least such tuple of the given length.
std::optional<std::vector<int>> find_hole_of_length(const Graph& g, int length);

/// Shortest odd hole (length >= 5), least tuple at that length.
std::optional<std::vector<int>> find_odd_hole_cycle(const Graph& g);
/// Shortest odd antihole (length >= 5) listed so that consecutive entries are
/// NON-adjacent in g.
std::optional<std::vector<int>> find_odd_antihole_cycle(const Graph& g);

std::optional<VertexSet> find_odd_hole(const Graph& g);
std::optional<VertexSet> find_odd_antihole(const Graph& g);

/// No odd hole and no odd antihole.
bool is_perfect(const Graph& g);

/// True iff G[s] is itself an odd hole (odd cycle on >= 5 vertices).
bool induces_odd_hole_exactly(const Graph& g, VertexSet s);
/// True iff G[s] is itself an odd antihole on >= 5 vertices.
bool induces_odd_antihole_exactly(const Graph& g, VertexSet s);

/// Exhaustive scan over all bipartitions of V(g). Requires g to be an odd
/// antihole on at least 5 vertices (PreconditionError otherwise); returns
/// true iff no split into two cliques exists.
bool odd_antihole_not_two_cliques(const Graph& g);

}  // namespace chibind
