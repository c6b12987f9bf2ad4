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

#include "chibind/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "chibind/errors.hpp"
#include "chibind/invariants.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

namespace {

int wrap(int i) { return ((i - 1) % 5 + 5) % 5 + 1; }

std::string class_name(int mask) {
  std::string out = "N{";
  bool first = true;
  for (int i = 1; i <= 5; ++i) {
    if ((mask >> (i - 1) & 1) == 0) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

void require_free(const Graph& g, std::initializer_list<std::string_view> names, const char* who) {
  for (auto name : names) {
    if (find_induced(g, pattern(name).graph)) {
      throw PreconditionError(std::string(who) + ": graph induces " + std::string(name));
    }
  }
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw PreconditionError(std::string(who) + ": graph is not connected");
}

// Cliques ordered by size, then by ascending member list.
std::vector<VertexSet> all_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  auto grow = [&](auto&& self, VertexSet clique, VertexSet cand) -> void {
    for (int v : cand) {
      const VertexSet next = clique.with(v);
      out.push_back(next);
      self(self, next, cand & g.neighbors(v) & VertexSet(~VertexSet::first(v + 1).bits()));
    }
  };
  grow(grow, VertexSet{}, g.vertices());
  std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  return out;
}

bool triangle_free(const Graph& g, VertexSet s) {
  return !find_induced(induced(g, s), complete_graph(3)).has_value();
}

}  // namespace

int FiveHoleDecomposition::mask(std::initializer_list<int> indices) {
  int m = 0;
  for (int i : indices) m |= 1 << (wrap(i) - 1);
  return m;
}

int FiveHoleDecomposition::v(int i) const { return hole[static_cast<std::size_t>(wrap(i) - 1)]; }

VertexSet FiveHoleDecomposition::hole_set() const {
  return VertexSet::of(std::vector<int>(hole.begin(), hole.end()));
}

VertexSet FiveHoleDecomposition::level(int i) const {
  if (i < 1 || i > static_cast<int>(levels.size())) return VertexSet{};
  return levels[static_cast<std::size_t>(i - 1)];
}

bool is_admissible_class(int mask) {
  if (mask == 31) return true;
  for (int i = 1; i <= 5; ++i) {
    if (mask == FiveHoleDecomposition::mask({i, i + 2}) || mask == FiveHoleDecomposition::mask({i, i + 1, i + 2}) ||
        mask == FiveHoleDecomposition::mask({i, i + 1, i + 3}) ||
        mask == FiveHoleDecomposition::mask({i, i + 1, i + 2, i + 3})) {
      return true;
    }
  }
  return false;
}

std::optional<Hole5> find_five_hole(const Graph& g) {
  auto c = find_hole_of_length(g, 5);
  if (!c) return std::nullopt;
  Hole5 out{};
  std::copy(c->begin(), c->end(), out.begin());
  return out;
}

std::vector<Hole5> all_five_holes(const Graph& g) {
  std::vector<Hole5> out;
  const int n = g.order();
  if (n < 5) return out;
  std::array<int, 5> idx{0, 1, 2, 3, 4};
  while (true) {
    VertexSet s;
    for (int i : idx) s = s.with(i);
    if (induces_odd_hole_exactly(g, s)) {
      Hole5 h{};
      h[0] = idx[0];
      const VertexSet nb = g.neighbors(h[0]) & s;
      h[1] = nb.min();
      for (int i = 2; i < 5; ++i) {
        h[static_cast<std::size_t>(i)] =
            (g.neighbors(h[static_cast<std::size_t>(i - 1)]) & s).without(h[static_cast<std::size_t>(i - 2)]).min();
      }
      out.push_back(h);
    }
    int i = 4;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - 5 + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < 5; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

FiveHoleDecomposition decompose_five_hole(const Graph& g, const Hole5& hole, std::optional<bool> p5_free) {
  FiveHoleDecomposition dec;
  dec.hole = hole;
  for (int i = 0; i < 5; ++i) {
    const int a = hole[static_cast<std::size_t>(i)];
    if (a < 0 || a >= g.order()) throw PreconditionError("hole vertex out of range");
    const int b = hole[static_cast<std::size_t>((i + 1) % 5)];
    const int c = hole[static_cast<std::size_t>((i + 2) % 5)];
    if (a == b || a == c || !g.adjacent(a, b) || g.adjacent(a, c)) {
      throw PreconditionError("decompose_five_hole: the given vertices are not an induced 5-cycle in order");
    }
  }
  const VertexSet c = dec.hole_set();
  const auto dist = distances_from(g, c);
  for (int x = 0; x < g.order(); ++x) {
    const auto& d = dist[static_cast<std::size_t>(x)];
    if (!d) {
      dec.unreachable = dec.unreachable.with(x);
      continue;
    }
    if (*d == 0) continue;
    if (static_cast<int>(dec.levels.size()) < *d) dec.levels.resize(static_cast<std::size_t>(*d));
    dec.levels[static_cast<std::size_t>(*d - 1)] = dec.levels[static_cast<std::size_t>(*d - 1)].with(x);
    if (*d == 1) {
      int m = 0;
      for (int i = 0; i < 5; ++i) {
        if (g.adjacent(x, hole[static_cast<std::size_t>(i)])) m |= 1 << i;
      }
      dec.classes[static_cast<std::size_t>(m)] = dec.classes[static_cast<std::size_t>(m)].with(x);
    }
  }

  const bool assert_p5 = p5_free ? *p5_free : !find_induced(g, path_graph(5)).has_value();
  if (assert_p5) {
    for (int m = 1; m < 32; ++m) {
      if (!is_admissible_class(m) && !dec.classes[static_cast<std::size_t>(m)].empty()) {
        detail::fail_internal("P5-free host has a vertex in " + class_name(m));
      }
    }
    for (int i = 1; i <= 5; ++i) {
      const VertexSet x = dec.cls({i, i + 2}) | dec.cls({i, i + 1, i + 2});
      detail::ensure(!neighborhood_of(g, x).intersects(dec.level(2)),
                     "P5-free host: skip or consecutive class sees N^2(C)");
    }
  }
  return dec;
}

std::array<VertexSet, 5> s_cliques(const FiveHoleDecomposition& d) {
  return {
      d.cls({2, 5}) | d.cls({2, 3, 5}) | d.cls({2, 4, 5}) | d.cls({2, 3, 4, 5}),
      d.cls({1, 3}) | d.cls({1, 3, 4}) | d.cls({1, 3, 5}) | d.cls({1, 3, 4, 5}),
      d.cls({2, 4}) | d.cls({1, 2, 4, 5}),
      d.cls({3, 5}) | d.cls({1, 2, 3, 5}),
      d.cls({1, 4}) | d.cls({1, 2, 4}) | d.cls({1, 2, 3, 4}),
  };
}

Violations check_p5_hole_lemma(const Graph& g, const FiveHoleDecomposition& dec) {
  require_free(g, {"P5"}, "check_p5_hole_lemma");
  Violations out;
  for (int m = 1; m < 32; ++m) {
    if (!is_admissible_class(m) && !dec.classes[static_cast<std::size_t>(m)].empty()) {
      out.push_back(class_name(m) + " is nonempty: " + dec.classes[static_cast<std::size_t>(m)].to_string());
    }
  }
  const VertexSet n2 = dec.level(2);
  const VertexSet n3 = dec.level(3);
  for (int i = 1; i <= 5; ++i) {
    const VertexSet x = dec.cls({i, i + 2}) | dec.cls({i, i + 1, i + 2});
    for (int u : x) {
      if (g.neighbors(u).intersects(n2)) {
        out.push_back("vertex " + std::to_string(u) + " of a skip/consecutive class sees N^2(C)");
      }
    }
  }
  if (dec.levels.size() > 3) out.push_back("N^4(C) is nonempty: " + dec.level(4).to_string());

  for (int x : dec.level(1)) {
    const auto dist = distances_from(g, VertexSet::single(x));
    VertexSet second;
    for (int y = 0; y < g.order(); ++y) {
      if (dist[static_cast<std::size_t>(y)] == 2) second = second.with(y);
    }
    if (second.intersects(n3) && !dec.all_five().contains(x)) {
      out.push_back("vertex " + std::to_string(x) + " reaches N^3(C) in two steps outside the all-five class");
    }
  }
  const auto comps = components_within(g, n3);
  for (int x : n2) {
    for (VertexSet b : comps) {
      const VertexSet seen = g.neighbors(x) & b;
      if (!seen.empty() && seen != b) {
        out.push_back("N^2 vertex " + std::to_string(x) + " is mixed on N^3 component " + b.to_string());
      }
    }
  }
  return out;
}

Violations check_k23_hole_lemma(const Graph& g, const FiveHoleDecomposition& dec) {
  require_free(g, {"P5", "K2,3"}, "check_k23_hole_lemma");
  Violations out;
  const VertexSet nc = dec.level(1);

  for (int u : nc) {
    for (int v : nc) {
      if (v <= u || g.adjacent(u, v)) continue;
      for (int i = 1; i <= 5; ++i) {
        const VertexSet both = g.neighbors(u) & g.neighbors(v);
        if (both.contains(dec.v(i)) && both.contains(dec.v(i + 2)) && !g.adjacent(u, dec.v(i + 1)) &&
            !g.adjacent(v, dec.v(i + 1))) {
          out.push_back("non-adjacent " + edge_name(u, v) + " share v" + std::to_string(i) + ",v" +
                        std::to_string(wrap(i + 2)) + " and both miss v" + std::to_string(wrap(i + 1)));
        }
      }
    }
  }

  for (int i = 1; i <= 5; ++i) {
    for (int m : {FiveHoleDecomposition::mask({i, i + 2}), FiveHoleDecomposition::mask({i, i + 1, i + 3}),
                  FiveHoleDecomposition::mask({i, i + 1, i + 2, i + 3})}) {
      if (!is_clique(g, dec.classes[static_cast<std::size_t>(m)])) out.push_back(class_name(m) + " is not a clique");
    }
  }

  auto alpha_at_most_two = [&](VertexSet s, const std::string& name) {
    if (!s.empty() && independence_number(induced(g, s)) > 2) out.push_back(name + " has an independent triple");
  };
  alpha_at_most_two(dec.all_five(), "N{1,2,3,4,5}");
  for (int i = 1; i <= 5; ++i) {
    const int m = FiveHoleDecomposition::mask({i, i + 1, i + 2});
    const int next = FiveHoleDecomposition::mask({i + 1, i + 2, i + 3});
    alpha_at_most_two(dec.classes[static_cast<std::size_t>(m)], class_name(m));
    if (!is_complete_to(g, dec.classes[static_cast<std::size_t>(m)], dec.classes[static_cast<std::size_t>(next)])) {
      out.push_back(class_name(m) + " is not complete to " + class_name(next));
    }
  }

  const VertexSet n2 = dec.level(2);
  for (int u : nc) {
    for (int v : nc) {
      if (v <= u || g.adjacent(u, v) || is_bad_pair(g, dec, u, v)) continue;
      const VertexSet common = g.neighbors(u) & g.neighbors(v) & n2;
      if (!common.empty()) {
        out.push_back("non-adjacent good pair " + edge_name(u, v) + " has common N^2 neighbours " + common.to_string());
      }
    }
  }

  const auto s = s_cliques(dec);
  VertexSet covered;
  const int omega = clique_number(g);
  for (int i = 0; i < 5; ++i) {
    const VertexSet si = s[static_cast<std::size_t>(i)];
    const std::string name = "S" + std::to_string(i + 1);
    if (covered.intersects(si)) out.push_back(name + " overlaps an earlier S-clique");
    covered |= si;
    if (!is_clique(g, si)) out.push_back(name + " is not a clique");
    if (si.size() > omega - 1) out.push_back(name + " has more than omega-1 vertices");
    if (g.neighbors(dec.v(i + 1)).intersects(si)) out.push_back("v" + std::to_string(i + 1) + " sees " + name);
  }
  VertexSet expected = nc - dec.all_five();
  for (int i = 1; i <= 5; ++i) expected -= dec.cls({i, i + 1, i + 2});
  if (covered != expected) {
    out.push_back("S-cliques cover " + covered.to_string() + " instead of " + expected.to_string());
  }
  return out;
}

Violations check_k23_atom_lemma(const Graph& g, const FiveHoleDecomposition& dec) {
  require_free(g, {"P5", "K2,3"}, "check_k23_atom_lemma");
  require_connected(g, "check_k23_atom_lemma");
  if (find_clique_cutset(g)) throw PreconditionError("check_k23_atom_lemma: graph has a clique cutset");
  Violations out;
  if (!dec.level(3).empty()) out.push_back("N^3(C) is nonempty: " + dec.level(3).to_string());
  const int omega = clique_number(g);
  const VertexSet nc = dec.level(1);
  for (VertexSet b : components_within(g, dec.level(2))) {
    const Graph gb = induced(g, b);
    if (independence_number(gb) > 2) out.push_back("N^2 component " + b.to_string() + " has alpha > 2");
    if (clique_number(gb) == omega) {
      const VertexSet attach = neighborhood_of(g, b) & nc;
      if (!attach.is_subset_of(dec.all_five())) {
        out.push_back("N^2 component " + b.to_string() + " of full clique number sees " +
                      (attach - dec.all_five()).to_string() + " outside the all-five class");
      }
    }
  }
  return out;
}

bool is_bad_pair(const Graph& g, const FiveHoleDecomposition& dec, int u, int v) {
  const VertexSet nc = dec.level(1);
  if (!nc.contains(u) || !nc.contains(v)) throw PreconditionError("is_bad_pair: both vertices must lie in N(C)");
  if (g.adjacent(u, v)) throw PreconditionError("is_bad_pair: vertices must be non-adjacent");
  for (int i = 1; i <= 5; ++i) {
    const VertexSet three = dec.cls({i, i + 1, i + 3});
    const VertexSet four = dec.cls({i, i + 1, i + 2, i + 4});
    if ((three.contains(u) && four.contains(v)) || (three.contains(v) && four.contains(u))) return true;
  }
  return false;
}

SecondLevelSplit split_second_level(const Graph& g, const FiveHoleDecomposition& dec) {
  SecondLevelSplit out;
  const VertexSet nc = dec.level(1);
  for (VertexSet t : components_within(g, dec.level(2))) {
    VertexSet seers;
    for (int x : nc) {
      if (g.neighbors(x).intersects(t)) seers = seers.with(x);
    }
    bool dominated = false;
    for (int x : seers) {
      if (t.is_subset_of(g.neighbors(x))) {
        dominated = true;
        break;
      }
    }
    if (dominated) {
      out.a |= t;
      continue;
    }
    std::optional<std::pair<int, int>> pair;
    for (int u : seers) {
      for (int v : seers) {
        if (v > u && !g.adjacent(u, v)) {
          pair = std::make_pair(u, v);
          break;
        }
      }
      if (pair) break;
    }
    if (!pair) {
      out.problems.push_back("N^2 component " + t.to_string() + " is undominated but N(C) has no non-adjacent pair seeing it");
      out.a |= t;
      continue;
    }
    const VertexSet tu = g.neighbors(pair->first) & t;
    const VertexSet tv = (g.neighbors(pair->second) & t) - tu;
    const VertexSet rest = t - tu - tv;
    out.a |= tu;
    out.b |= rest | tv;
  }
  if (!triangle_free(g, out.a)) out.problems.push_back("first N^2 part " + out.a.to_string() + " has a triangle");
  if (!triangle_free(g, out.b)) out.problems.push_back("second N^2 part " + out.b.to_string() + " has a triangle");
  return out;
}

Violations check_k1k1k3_hole_lemma(const Graph& g, const FiveHoleDecomposition& dec) {
  require_free(g, {"P5", "K1+(K1uK3)"}, "check_k1k1k3_hole_lemma");
  require_connected(g, "check_k1k1k3_hole_lemma");
  if (find_clique_cutset(g)) throw PreconditionError("check_k1k1k3_hole_lemma: graph has a clique cutset");
  Violations out;
  const Graph k1k3 = pattern("K1uK3").graph;
  for (int i = 1; i <= 5; ++i) {
    if (find_induced(induced(g, g.neighbors(dec.v(i))), k1k3)) {
      out.push_back("N(v" + std::to_string(i) + ") induces K1uK3");
    }
    if (!triangle_free(g, dec.cls({i, i + 2}))) out.push_back(class_name(FiveHoleDecomposition::mask({i, i + 2})) + " has a triangle");
    const VertexSet group = dec.cls({i, i + 1, i + 2}) | dec.cls({i, i + 1, i + 3}) | dec.cls({i, i + 1, i + 2, i + 3});
    if (!is_independent(g, group)) out.push_back("group " + std::to_string(i) + " of triple/quad classes is not independent");
  }
  const VertexSet nc = dec.level(1);
  for (VertexSet t : components_within(g, dec.level(2))) {
    bool dominated = false;
    for (int x : nc) dominated = dominated || t.is_subset_of(g.neighbors(x));
    if (dominated) continue;
    bool pair = false;
    for (int u : nc) {
      for (int v : nc) {
        pair = pair || (v > u && !g.adjacent(u, v) && g.neighbors(u).intersects(t) && g.neighbors(v).intersects(t));
      }
    }
    if (!pair) out.push_back("undominated N^2 component " + t.to_string() + " without a non-adjacent pair seeing it");
  }
  return out;
}

Violations check_k1k1k3_second_level_lemma(const Graph& g, const FiveHoleDecomposition& dec) {
  require_free(g, {"P5", "K1+(K1uK3)"}, "check_k1k1k3_second_level_lemma");
  require_connected(g, "check_k1k1k3_second_level_lemma");
  if (find_clique_cutset(g)) throw PreconditionError("check_k1k1k3_second_level_lemma: graph has a clique cutset");
  Violations out;
  if (!triangle_free(g, dec.level(3))) out.push_back("N^3(C) has a triangle");
  SecondLevelSplit split = split_second_level(g, dec);
  out.insert(out.end(), split.problems.begin(), split.problems.end());
  if ((split.a | split.b) != dec.level(2) || split.a.intersects(split.b)) {
    out.push_back("N^2 split does not partition N^2(C)");
  }
  return out;
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
  const int n = g.order();
  std::optional<VertexSet> best;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      VertexSet x{u, v};
      bool grew = true;
      while (grew) {
        grew = false;
        for (int w : g.vertices() - x) {
          const VertexSet seen = g.neighbors(w) & x;
          if (!seen.empty() && seen != x) {
            x = x.with(w);
            grew = true;
          }
        }
      }
      if (x.size() > n - 1) continue;
      if (!best || x.size() < best->size() || (x.size() == best->size() && VertexSet::lex_less(x, *best))) best = x;
    }
  }
  return best;
}

std::optional<CutsetReport> find_clique_cutset(const Graph& g) {
  require_connected(g, "find_clique_cutset");
  for (VertexSet k : all_cliques(g)) {
    const VertexSet rest = g.vertices() - k;
    if (rest.empty()) continue;
    auto sides = components_within(g, rest);
    if (sides.size() >= 2) return CutsetReport{k, CutsetKind::clique, std::move(sides)};
  }
  return std::nullopt;
}

std::vector<CutsetReport> minimal_cutsets(const Graph& g) {
  require_connected(g, "minimal_cutsets");
  const VertexSet all = g.vertices();
  std::set<std::uint64_t> seen;
  std::deque<VertexSet> queue;
  auto harvest = [&](VertexSet removed) {
    for (VertexSet comp : components_within(g, all - removed)) {
      const VertexSet sep = neighborhood_of(g, comp) - comp;
      if (!sep.empty() && seen.insert(sep.bits()).second) queue.push_back(sep);
    }
  };
  for (int v = 0; v < g.order(); ++v) harvest(g.neighbors(v).with(v));
  while (!queue.empty()) {
    const VertexSet s = queue.front();
    queue.pop_front();
    for (int x : s) harvest(s | g.neighbors(x));
  }

  // Keep separators with two full sides, then the inclusion-minimal ones.
  std::vector<VertexSet> separators;
  for (std::uint64_t bits : seen) {
    const VertexSet s(bits);
    int full = 0;
    for (VertexSet comp : components_within(g, all - s)) {
      if ((neighborhood_of(g, comp) - comp) == s) ++full;
    }
    if (full >= 2) separators.push_back(s);
  }
  std::vector<CutsetReport> out;
  for (VertexSet s : separators) {
    const bool minimal = std::none_of(separators.begin(), separators.end(),
                                      [&](VertexSet t) { return t != s && t.is_subset_of(s); });
    if (minimal) out.push_back(CutsetReport{s, CutsetKind::minimal, components_within(g, all - s)});
  }
  std::sort(out.begin(), out.end(), [](const CutsetReport& a, const CutsetReport& b) {
    if (a.cutset.size() != b.cutset.size()) return a.cutset.size() < b.cutset.size();
    return VertexSet::lex_less(a.cutset, b.cutset);
  });
  return out;
}

DominatingSet find_dominating_clique_or_p3(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("find_dominating_clique_or_p3: empty graph");
  require_connected(g, "find_dominating_clique_or_p3");
  require_free(g, {"P5"}, "find_dominating_clique_or_p3");
  const VertexSet all = g.vertices();
  auto dominates = [&](VertexSet s) { return (neighborhood_of(g, s) | s) == all; };
  for (VertexSet k : all_cliques(g)) {
    if (dominates(k)) return DominatingSet{DominatingKind::clique, k, k.to_vector()};
  }
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const int ab = g.adjacent(a, b), ac = g.adjacent(a, c), bc = g.adjacent(b, c);
        if (ab + ac + bc != 2) continue;
        const VertexSet s{a, b, c};
        if (!dominates(s)) continue;
        std::vector<int> order;
        if (!bc) order = {b, a, c};
        else if (!ac) order = {a, b, c};
        else order = {a, c, b};
        return DominatingSet{DominatingKind::p3, s, order};
      }
    }
  }
  detail::fail_internal("connected P5-free graph without a dominating clique or P3: " + describe(g));
}

namespace {

// True when some induced s1..s2 path with interior in `side` has two or more
// interior vertices.
bool has_long_path(const Graph& g, int s1, int s2, VertexSet side) {
  std::vector<int> path;
  auto extend = [&](auto&& self, VertexSet earlier) -> bool {
    const int last = path.back();
    for (int y : g.neighbors(last) & side) {
      if (g.adjacent(y, s1) || g.neighbors(y).intersects(earlier) || std::find(path.begin(), path.end(), y) != path.end()) continue;
      if (g.adjacent(y, s2)) return true;
      path.push_back(y);
      if (self(self, earlier.with(last))) return true;
      path.pop_back();
    }
    return false;
  };
  for (int x : g.neighbors(s1) & side) {
    if (g.adjacent(x, s2)) continue;
    path.assign(1, x);
    if (extend(extend, VertexSet{})) return true;
  }
  return false;
}

}  // namespace

Violations check_c5_cutset_lemma(const Graph& g) {
  require_free(g, {"P5", "C5", "K2,3"}, "check_c5_cutset_lemma");
  require_connected(g, "check_c5_cutset_lemma");
  if (find_clique_cutset(g)) throw PreconditionError("check_c5_cutset_lemma: graph has a clique cutset");
  Violations out;
  for (const CutsetReport& r : minimal_cutsets(g)) {
    const VertexSet s = r.cutset;
    const std::string tag = "cutset " + s.to_string() + ": ";
    if (r.side_components.size() != 2) {
      out.push_back(tag + std::to_string(r.side_components.size()) + " sides");
    }
    for (int a : s) {
      for (int b : s) {
        if (b <= a || g.adjacent(a, b)) continue;
        for (VertexSet side : r.side_components) {
          if (has_long_path(g, a, b, side)) {
            out.push_back(tag + "long induced path " + edge_name(a, b) + " through " + side.to_string());
          }
        }
      }
    }
    for (int x : s) {
      bool complete = false;
      for (VertexSet side : r.side_components) complete = complete || side.is_subset_of(g.neighbors(x));
      if (!complete) out.push_back(tag + "vertex " + std::to_string(x) + " is complete to no side");
    }
    if (independence_number(induced(g, s)) != 2) out.push_back(tag + "alpha(G[S]) != 2");
  }
  return out;
}

}  // namespace chibind
