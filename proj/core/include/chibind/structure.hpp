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

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

/// Human-readable failures of a structural check; empty means the check held.
using Violations = std::vector<std::string>;

using Hole5 = std::array<int, 5>;

/// Least induced 5-cycle v1..v5 (v1 smallest, v2 < v5).
std::optional<Hole5> find_five_hole(const Graph& g);
/// Every induced 5-cycle, each listed once in the same normal form.
std::vector<Hole5> all_five_holes(const Graph& g);

/// Neighbourhood classes and distance levels around a 5-hole C = v1..v5.
///
/// Hole indices are 1-based and taken mod 5, so cls({4, 5, 6}) is the class
/// of vertices seeing exactly v4, v5 and v1.
struct FiveHoleDecomposition {
  Hole5 hole{};
  /// classes[m]: vertices of N(C) whose hole neighbours are exactly
  /// {v_i : bit i-1 of m set}. classes[0] is always empty.
  std::array<VertexSet, 32> classes{};
  /// levels[0] = N(C), levels[1] = N^2(C), ...; no trailing empty level.
  std::vector<VertexSet> levels;
  /// Vertices in other components than the hole.
  VertexSet unreachable;

  static int mask(std::initializer_list<int> indices);
  VertexSet cls(std::initializer_list<int> indices) const { return classes[static_cast<std::size_t>(mask(indices))]; }
  /// v_i with i taken mod 5 (1-based).
  int v(int i) const;
  VertexSet hole_set() const;
  /// N^i(C) for i >= 1; empty beyond the last level.
  VertexSet level(int i) const;
  /// Union of classes over the given index sets.
  VertexSet all_five() const { return classes[31]; }
};

/// Requires an induced 5-cycle (PreconditionError otherwise). When the host is
/// P5-free (detected unless given), asserts that no vertex sees exactly one or
/// two consecutive hole vertices and that N_{i,i+2} and N_{i,i+1,i+2} are
/// anticomplete to N^2(C).
FiveHoleDecomposition decompose_five_hole(const Graph& g, const Hole5& hole,
                                          std::optional<bool> p5_free = std::nullopt);

/// Consecutive-triple, skip and quad classes: the only nonempty classes of a
/// P5-free host besides the all-five class.
bool is_admissible_class(int mask);

/// The five cliques S1..S5 covering N(C) minus the all-five and consecutive
/// triple classes in a (P5,K2,3)-free host.
std::array<VertexSet, 5> s_cliques(const FiveHoleDecomposition& dec);

/// Three-level claims for P5-free hosts: levels stop at N^3 on the hole's
/// component; neighbours of N^3 at distance two sit in the all-five class;
/// N^2 vertices are complete or anticomplete to each N^3 component.
Violations check_p5_hole_lemma(const Graph& g, const FiveHoleDecomposition& dec);

/// Clique, independence, completeness and S-partition claims for
/// (P5,K2,3)-free hosts.
Violations check_k23_hole_lemma(const Graph& g, const FiveHoleDecomposition& dec);

/// Second-neighbourhood claims for connected (P5,K2,3)-free hosts without a
/// clique cutset: N^3 empty, components of N^2 have α <= 2, and a component
/// of full clique number only attaches to the all-five class.
Violations check_k23_atom_lemma(const Graph& g, const FiveHoleDecomposition& dec);

/// u and v non-adjacent in N(C) with u in N_{i,i+1,i+3} and v in
/// N_{i,i+1,i+2,i+4} for some i (either order). PreconditionError unless u, v
/// are non-adjacent members of N(C).
bool is_bad_pair(const Graph& g, const FiveHoleDecomposition& dec, int u, int v);

/// Split of N^2(C) into two triangle-free parts, built per component of N^2:
/// a dominating neighbour puts the whole component in `a`; otherwise the least
/// non-adjacent pair u, v of N(C) seeing the component gives a = N_T(u) and
/// b = the rest. Problems are recorded instead of thrown.
struct SecondLevelSplit {
  VertexSet a;
  VertexSet b;
  Violations problems;
};
SecondLevelSplit split_second_level(const Graph& g, const FiveHoleDecomposition& dec);

/// Claims for connected (P5,K1+(K1uK3))-free hosts without clique cutset:
/// vertex neighbourhoods are K1uK3-free, skip classes triangle-free, and the
/// grouped triple/quad classes independent; an undominated N^2 component is
/// seen by two non-adjacent vertices of N(C).
Violations check_k1k1k3_hole_lemma(const Graph& g, const FiveHoleDecomposition& dec);
/// N^3 triangle-free and N^2 split into two triangle-free parts.
Violations check_k1k1k3_second_level_lemma(const Graph& g, const FiveHoleDecomposition& dec);

/// Smallest homogeneous set, ties broken by ascending member list.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);

enum class CutsetKind { clique, minimal };

struct CutsetReport {
  VertexSet cutset;
  CutsetKind kind = CutsetKind::minimal;
  std::vector<VertexSet> side_components;
};

/// Smallest clique whose removal disconnects g, ties by member list.
/// PreconditionError on disconnected input.
std::optional<CutsetReport> find_clique_cutset(const Graph& g);

/// All inclusion-minimal cutsets, ordered by size then member list.
/// PreconditionError on disconnected input.
std::vector<CutsetReport> minimal_cutsets(const Graph& g);

enum class DominatingKind { clique, p3 };

struct DominatingSet {
  DominatingKind kind = DominatingKind::clique;
  VertexSet set;
  /// Clique members ascending, or the P3 as end, middle, end.
  std::vector<int> order;
};

/// Dominating clique (smallest first) or, failing that, a dominating induced
/// P3. PreconditionError unless g is connected and P5-free; InternalError if
/// neither exists.
DominatingSet find_dominating_clique_or_p3(const Graph& g);

/// Minimal-cutset claims for connected (P5,C5,K2,3)-free graphs without a
/// clique cutset: two sides, short paths across each side, every cutset
/// vertex complete to a side, and α(G[S]) = 2.
Violations check_c5_cutset_lemma(const Graph& g);

/// Odd antihole on at least seven vertices, listed so that consecutive
/// entries are non-adjacent in g; least by length then tuple.
std::optional<std::vector<int>> find_long_odd_antihole(const Graph& g);

struct AntiholeDecomposition {
  std::vector<int> cycle;
  /// Vertices complete to the antihole.
  VertexSet s;
  /// N(A) minus s.
  VertexSet t;
  /// t_classes[i]: members of t missing cycle[i] and seeing cycle[i+1] and
  /// cycle[i+3]; each vertex sits in the first such class.
  std::vector<VertexSet> t_classes;
  /// Members of t in no class.
  VertexSet unclassified;
  /// Vertices at distance exactly two from the antihole.
  VertexSet beyond;
};

AntiholeDecomposition decompose_odd_antihole(const Graph& g, const std::vector<int>& cycle);

/// Claims for (P5,C5,K1+(K1uK3))-free hosts around a long odd antihole.
Violations check_antihole_lemma(const Graph& g, const AntiholeDecomposition& dec);

}  // namespace chibind
