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

#include <climits>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chibind/graph.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

inline constexpr int kMaxGenerateOrder = 10;
inline constexpr int kMaxCanonicalOrder = 11;
inline constexpr int kMaxGraph6Order = 62;

/// Upper-triangle adjacency bits in graph6 column order (x01, x02, x12, x03,
/// ...), first bit most significant. Requires n <= 11.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// Least adjacency_code over all relabellings of g.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

/// Canonical codes of every graph on n vertices, ascending. Computed once per
/// process and cached.
const std::vector<std::uint64_t>& canonical_codes(int n);

std::string encode_graph6(const Graph& g);
/// Accepts an optional trailing newline / carriage return.
Graph decode_graph6(std::string_view text);

struct StreamFilter {
  std::vector<Pattern> free_of;
  bool connected = false;
  int omega_min = 0;
  int omega_max = INT_MAX;

  bool accepts(const Graph& g) const;
};

/// Lazy single-pass sequence of graphs from a generator or a graph6 file.
class GraphStream {
 public:
  using Source = std::function<std::optional<Graph>()>;

  explicit GraphStream(Source source);

  std::optional<Graph> next();
  /// Adds a filter; filters run in insertion order before emission.
  GraphStream& where(StreamFilter filter);

  std::vector<Graph> collect();

 private:
  Source source_;
  std::vector<StreamFilter> filters_;
};

/// One representative per isomorphism class in ascending canonical-code
/// order. Throws PreconditionError for n outside [0, 10].
GraphStream generate(int n, bool connected_only);

/// Graph6 lines from a file; blank lines are skipped. Throws
/// PreconditionError if the file cannot be opened or a line fails to parse.
GraphStream read_graph6_file(const std::string& path);
GraphStream from_graphs(std::vector<Graph> graphs);

/// Drops non-members lazily. Pattern names resolve through the catalog
/// (PreconditionError for an unknown name).
GraphStream filter_stream(GraphStream s, const std::vector<std::string>& free_of, StreamFilter predicates = {});

}  // namespace chibind
