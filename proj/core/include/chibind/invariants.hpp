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
#include <string>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

/// colors[v] in [0, k). Produced by every colorer; check with is_proper.
struct Coloring {
  std::vector<int> colors;
  int k = 0;

  /// Number of distinct colors actually present.
  int used() const;
};

/// Sizes match, every color lies in [0, k) and no edge is monochromatic.
bool is_proper(const Graph& g, const Coloring& c);

/// Renumbers colors by first appearance in vertex order so that k == used().
Coloring compact(Coloring c);

VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);
int independence_number(const Graph& g);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// Exact chromatic number with a witness coloring using exactly chi colors.
ChromaticResult chromatic_number(const Graph& g);

/// Saturation-order greedy coloring; an upper bound for chromatic_number.
Coloring dsatur_coloring(const Graph& g);

struct PerfectDivision {
  VertexSet a;
  VertexSet b;
  int omega_g = 0;
  int omega_b = 0;
};

/// Largest orders accepted by the subset scans below.
inline constexpr int kDivisionMaxOrder = 20;
inline constexpr int kDivisibilityMaxOrder = 16;

/// First A (by descending |A|, then ascending member list) such that G[A] is
/// perfect and ω(G - A) < ω(G). Returns nothing for the empty graph.
std::optional<PerfectDivision> find_perfect_division(const Graph& g);

/// Every nonempty induced subgraph admits a perfect division.
bool is_perfectly_divisible(const Graph& g);

/// Colors a perfectly divisible graph by peeling perfect divisions: each
/// perfect part gets its own exact palette. Uses at most C(ω+1, 2) colors.
/// Throws PreconditionError when g is not perfectly divisible.
ChromaticResult chi_bound_divisible(const Graph& g);

}  // namespace chibind
