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

#include "chibind/errors.hpp"
#include "chibind/patterns.hpp"
#include "chibind/structure.hpp"

namespace chibind {

std::optional<std::vector<int>> find_long_odd_antihole(const Graph& g) {
  const Graph comp = complement(g);
  for (int len = 7; len <= g.order(); len += 2) {
    if (auto c = find_hole_of_length(comp, len)) return c;
  }
  return std::nullopt;
}

AntiholeDecomposition decompose_odd_antihole(const Graph& g, const std::vector<int>& cycle) {
  const int h = static_cast<int>(cycle.size());
  for (int v : cycle) {
    if (v < 0 || v >= g.order()) throw PreconditionError("antihole vertex out of range");
  }
  const VertexSet a = VertexSet::of(cycle);
  if (a.size() != h || !induces_odd_antihole_exactly(g, a)) {
    throw PreconditionError("decompose_odd_antihole: vertices do not induce an odd antihole");
  }
  auto at = [&](int i) { return cycle[static_cast<std::size_t>(i % h)]; };
  for (int i = 0; i < h; ++i) {
    if (g.adjacent(at(i), at(i + 1))) {
      throw PreconditionError("decompose_odd_antihole: consecutive entries must be non-adjacent");
    }
  }

  AntiholeDecomposition dec;
  dec.cycle = cycle;
  dec.t_classes.assign(static_cast<std::size_t>(h), VertexSet{});
  const VertexSet na = neighborhood_of(g, a) - a;
  for (int x : na) {
    if (a.is_subset_of(g.neighbors(x))) {
      dec.s = dec.s.with(x);
      continue;
    }
    dec.t = dec.t.with(x);
    bool placed = false;
    for (int i = 0; i < h && !placed; ++i) {
      if (!g.adjacent(x, at(i)) && g.adjacent(x, at(i + 1)) && g.adjacent(x, at(i + 3))) {
        dec.t_classes[static_cast<std::size_t>(i)] = dec.t_classes[static_cast<std::size_t>(i)].with(x);
        placed = true;
      }
    }
    if (!placed) dec.unclassified = dec.unclassified.with(x);
  }
  dec.beyond = neighborhood_of(g, na) - na - a;
  return dec;
}

Violations check_antihole_lemma(const Graph& g, const AntiholeDecomposition& dec) {
  for (const char* name : {"P5", "C5", "K1+(K1uK3)"}) {
    if (find_induced(g, pattern(name).graph)) {
      throw PreconditionError(std::string("check_antihole_lemma: graph induces ") + name);
    }
  }
  if (dec.cycle.size() < 7) throw PreconditionError("check_antihole_lemma: antihole needs at least 7 vertices");
  Violations out;
  if (find_induced(induced(g, dec.s), pattern("K1uK3").graph)) {
    out.push_back("vertices complete to the antihole induce K1uK3");
  }
  if (!dec.unclassified.empty()) {
    out.push_back("partial neighbours outside every T_i: " + dec.unclassified.to_string());
  }
  for (std::size_t i = 0; i < dec.t_classes.size(); ++i) {
    if (!is_independent(g, dec.t_classes[i])) out.push_back("T_" + std::to_string(i) + " is not independent");
  }
  if (!dec.beyond.empty()) out.push_back("N^2(A) is nonempty: " + dec.beyond.to_string());
  return out;
}

}  // namespace chibind
