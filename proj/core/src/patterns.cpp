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

#include "chibind/patterns.hpp"

#include <algorithm>

#include "chibind/errors.hpp"

namespace chibind {

std::string Embedding::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(map[i]);
  }
  return out + "]";
}

namespace {

Graph edges(int n, std::initializer_list<std::pair<int, int>> list) {
  return from_edge_list(n, std::vector<std::pair<int, int>>(list));
}

std::vector<Pattern> build_catalog() {
  std::vector<Pattern> out;
  auto add = [&](std::string name, Graph g, bool external = false) {
    out.push_back(Pattern{name, g.with_label(name), external});
  };
  for (int k = 2; k <= 7; ++k) add("P" + std::to_string(k), path_graph(k));
  for (int k = 4; k <= 9; ++k) add("C" + std::to_string(k), cycle_graph(k));
  for (int k = 1; k <= 6; ++k) add("K" + std::to_string(k), complete_graph(k));
  add("K1,3", complete_bipartite(1, 3));
  add("K2,3", complete_bipartite(2, 3));
  const Graph k1 = complete_graph(1);
  const Graph k2 = complete_graph(2);
  const Graph k3 = complete_graph(3);
  add("2K2", disjoint_union(k2, k2));
  add("K1+2K2", join(k1, disjoint_union(k2, k2)));
  add("K1uK3", disjoint_union(k1, k3));
  add("K1+(K1uK3)", join(k1, disjoint_union(k1, k3)));
  // triangle 0-1-2 with pendants 3-0 and 4-1
  add("bull", edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}));
  // triangle 0-1-2 with pendants 3-0 and 4-0
  add("cricket", edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}}));
  add("diamond", join(k1, path_graph(3)));
  // diamond with hub 0 over path 1-2-3; pendant 4 on degree-2 vertex 1
  add("cochair", edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 4}}));
  add("dart", join(k1, disjoint_union(k1, path_graph(3))));
  // triangle 0-1-2, path 2-3-4
  add("hammer", edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}));
  add("house", complement(path_graph(5)));
  add("gem", join(k1, path_graph(4)));
  add("gem+", join(k1, disjoint_union(k1, path_graph(4))));
  // diamond (hub 0, path 1-2-3) plus 4 adjacent to the degree-2 vertices 1, 3
  add("paraglider", edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 4}, {3, 4}}));
  // C4 plus a pendant vertex
  add("banner", edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}), true);
  return out;
}

}  // namespace

const std::vector<Pattern>& pattern_catalog() {
  static const std::vector<Pattern> catalog = build_catalog();
  return catalog;
}

const Pattern& pattern(std::string_view name) {
  for (const Pattern& p : pattern_catalog()) {
    if (p.name == name) return p;
  }
  throw PreconditionError("unknown pattern name '" + std::string(name) + "'");
}

std::vector<Pattern> parse_pattern_list(std::string_view list) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : list) {
    if (c == ',') {
      tokens.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  if (!current.empty() || !tokens.empty()) tokens.push_back(current);

  auto known = [](const std::string& name) {
    const auto& cat = pattern_catalog();
    return std::any_of(cat.begin(), cat.end(), [&](const Pattern& p) { return p.name == name; });
  };

  std::vector<Pattern> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && known(tokens[i] + "," + tokens[i + 1])) {
      out.push_back(pattern(tokens[i] + "," + tokens[i + 1]));
      ++i;
      continue;
    }
    if (tokens[i].empty()) throw PreconditionError("empty pattern name in list");
    out.push_back(pattern(tokens[i]));
  }
  return out;
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pat) {
  const int k = pat.order();
  const int n = host.order();
  if (k > n) return std::nullopt;
  if (k == 0) return Embedding{};

  std::vector<int> pdeg(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pdeg[static_cast<std::size_t>(i)] = pat.degree(i);
  std::vector<int> hdeg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) hdeg[static_cast<std::size_t>(v)] = host.degree(v);

  // Host vertices able to play pattern vertex i at all.
  std::vector<VertexSet> feasible(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int pd = pdeg[static_cast<std::size_t>(i)];
    const int pnon = k - 1 - pd;
    for (int v = 0; v < n; ++v) {
      const int hd = hdeg[static_cast<std::size_t>(v)];
      if (hd >= pd && n - 1 - hd >= pnon) feasible[static_cast<std::size_t>(i)] = feasible[static_cast<std::size_t>(i)].with(v);
    }
    if (feasible[static_cast<std::size_t>(i)].empty()) return std::nullopt;
  }

  const VertexSet all = host.vertices();
  std::vector<int> map(static_cast<std::size_t>(k), -1);
  std::vector<VertexSet> cand(static_cast<std::size_t>(k));

  auto candidates_for = [&](int i, VertexSet used) {
    VertexSet c = feasible[static_cast<std::size_t>(i)] - used;
    for (int j = 0; j < i; ++j) {
      const int hj = map[static_cast<std::size_t>(j)];
      c &= pat.adjacent(i, j) ? host.neighbors(hj) : (all - host.neighbors(hj));
    }
    return c;
  };

  // Iterative depth-first search; cand[i] holds the untried candidates.
  int i = 0;
  VertexSet used;
  cand[0] = candidates_for(0, used);
  while (i >= 0) {
    auto& c = cand[static_cast<std::size_t>(i)];
    if (map[static_cast<std::size_t>(i)] >= 0) {
      used = used.without(map[static_cast<std::size_t>(i)]);
      map[static_cast<std::size_t>(i)] = -1;
    }
    if (c.empty()) {
      --i;
      continue;
    }
    const int v = c.min();
    c = c.without(v);
    map[static_cast<std::size_t>(i)] = v;
    used = used.with(v);
    if (i + 1 == k) return Embedding{map};
    ++i;
    cand[static_cast<std::size_t>(i)] = candidates_for(i, used);
    map[static_cast<std::size_t>(i)] = -1;
  }
  return std::nullopt;
}

bool is_free(const Graph& host, std::span<const Pattern> patterns) {
  return !first_induced(host, patterns).has_value();
}

bool is_free(const Graph& host, std::initializer_list<std::string_view> names) {
  for (auto name : names) {
    if (find_induced(host, pattern(name).graph)) return false;
  }
  return true;
}

std::optional<PatternHit> first_induced(const Graph& host, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns) {
    if (auto e = find_induced(host, p.graph)) return PatternHit{p.name, *e};
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_hole_of_length(const Graph& g, int length) {
  if (length < 4 || length > g.order()) return std::nullopt;
  const int n = g.order();
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(length));

  // Depth-first over induced paths s = p0 < every other pi; ascending
  // candidates make the first closed cycle the least tuple for this s.
  auto extend = [&](auto&& self, VertexSet allowed, VertexSet inner) -> bool {
    const int len = static_cast<int>(path.size());
    const int last = path.back();
    const int s = path.front();
    VertexSet cand = g.neighbors(last) & allowed;
    for (int w : cand) {
      const VertexSet hits = g.neighbors(w) & inner;
      if (len + 1 < length) {
        if (!hits.empty()) continue;
        path.push_back(w);
        if (self(self, allowed.without(w), inner.with(last))) return true;
        path.pop_back();
      } else {
        if (hits != VertexSet::single(s) || w < path[1]) continue;
        path.push_back(w);
        return true;
      }
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    VertexSet allowed = g.vertices() - VertexSet::first(s + 1);
    // inner = path vertices other than the last one
    if (extend(extend, allowed, VertexSet{})) return path;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_odd_hole_cycle(const Graph& g) {
  for (int len = 5; len <= g.order(); len += 2) {
    if (auto c = find_hole_of_length(g, len)) return c;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_odd_antihole_cycle(const Graph& g) {
  return find_odd_hole_cycle(complement(g));
}

std::optional<VertexSet> find_odd_hole(const Graph& g) {
  if (auto c = find_odd_hole_cycle(g)) return VertexSet::of(*c);
  return std::nullopt;
}

std::optional<VertexSet> find_odd_antihole(const Graph& g) {
  if (auto c = find_odd_antihole_cycle(g)) return VertexSet::of(*c);
  return std::nullopt;
}

bool is_perfect(const Graph& g) {
  return !find_odd_hole_cycle(g).has_value() && !find_odd_antihole_cycle(g).has_value();
}

namespace {

bool connected_within(const Graph& g, VertexSet s, bool use_complement) {
  if (s.empty()) return true;
  VertexSet reached = VertexSet::single(s.min());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) {
      next |= use_complement ? (s - g.neighbors(v)).without(v) : (g.neighbors(v) & s);
    }
    frontier = next - reached;
    reached |= next;
  }
  return reached == s;
}

}  // namespace

bool induces_odd_hole_exactly(const Graph& g, VertexSet s) {
  const int k = s.size();
  if (k < 5 || k % 2 == 0) return false;
  for (int v : s) {
    if ((g.neighbors(v) & s).size() != 2) return false;
  }
  return connected_within(g, s, false);
}

bool induces_odd_antihole_exactly(const Graph& g, VertexSet s) {
  const int k = s.size();
  if (k < 5 || k % 2 == 0) return false;
  for (int v : s) {
    if ((g.neighbors(v) & s).size() != k - 3) return false;
  }
  return connected_within(g, s, true);
}

bool odd_antihole_not_two_cliques(const Graph& g) {
  if (!induces_odd_antihole_exactly(g, g.vertices())) {
    throw PreconditionError("odd_antihole_not_two_cliques: input is not an odd antihole");
  }
  if (g.order() > 24) throw PreconditionError("odd_antihole_not_two_cliques: order above 24");
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t a = 0; a <= full; ++a) {
    const VertexSet side(a);
    if (is_clique(g, side) && is_clique(g, VertexSet(full & ~a))) return false;
  }
  return true;
}

}  // namespace chibind
