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

#include "chibind/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chibind/detail/subset_tables.hpp"
#include "chibind/errors.hpp"

namespace chibind {

int Coloring::used() const {
  std::vector<int> seen = colors;
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    const int cv = c.colors[static_cast<std::size_t>(v)];
    if (cv < 0 || cv >= c.k) return false;
    for (int u : g.neighbors(v)) {
      if (u > v && c.colors[static_cast<std::size_t>(u)] == cv) return false;
    }
  }
  return true;
}

Coloring compact(Coloring c) {
  std::map<int, int> remap;
  for (int& x : c.colors) {
    if (x < 0) continue;
    auto [it, inserted] = remap.try_emplace(x, static_cast<int>(remap.size()));
    x = it->second;
  }
  c.k = static_cast<int>(remap.size());
  return c;
}

namespace {

// Vertices by descending degree, ties by index.
std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet r, VertexSet p) {
    // Greedy color classes give an upper bound on the clique inside p.
    std::vector<std::pair<int, int>> colored;
    colored.reserve(static_cast<std::size_t>(p.size()));
    VertexSet uncolored = p;
    int k = 0;
    while (!uncolored.empty()) {
      ++k;
      VertexSet q = uncolored;
      while (!q.empty()) {
        const int v = q.min();
        q = (q - g_.neighbors(v)).without(v);
        uncolored = uncolored.without(v);
        colored.emplace_back(v, k);
      }
    }
    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      const auto [v, bound] = *it;
      if (r.size() + bound <= best_.size()) return;
      const VertexSet r2 = r.with(v);
      const VertexSet p2 = p & g_.neighbors(v);
      if (p2.empty()) {
        if (r2.size() > best_.size()) best_ = r2;
      } else {
        expand(r2, p2);
      }
      p = p.without(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
};

// Exact k-coloring by saturation-ordered backtracking.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k) : g_(g), n_(g.order()), k_(k) {
    color_.assign(static_cast<std::size_t>(n_), -1);
    blocked_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_), 0);
    sat_.assign(static_cast<std::size_t>(n_), 0);
  }

  void precolor(const std::vector<int>& clique) {
    int c = 0;
    for (int v : clique) assign(v, c++);
    max_color_ = c - 1;
  }

  bool solve(int remaining) {
    if (remaining == 0) return true;
    const int v = select();
    if (sat_[static_cast<std::size_t>(v)] >= k_) return false;
    const int limit = std::min(k_ - 1, max_color_ + 1);
    for (int c = 0; c <= limit; ++c) {
      if (blocked(v, c) != 0) continue;
      const int saved_max = max_color_;
      max_color_ = std::max(max_color_, c);
      assign(v, c);
      if (solve(remaining - 1)) return true;
      unassign(v, c);
      max_color_ = saved_max;
    }
    return false;
  }

  std::vector<int> colors() const { return color_; }

 private:
  int& blocked(int v, int c) {
    return blocked_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
  }

  int select() {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const int sv = sat_[static_cast<std::size_t>(v)];
      const int sb = sat_[static_cast<std::size_t>(best)];
      if (sv > sb || (sv == sb && g_.degree(v) > g_.degree(best))) best = v;
    }
    return best;
  }

  void assign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (int u : g_.neighbors(v)) {
      if (blocked(u, c)++ == 0) ++sat_[static_cast<std::size_t>(u)];
    }
  }

  void unassign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = -1;
    for (int u : g_.neighbors(v)) {
      if (--blocked(u, c) == 0) --sat_[static_cast<std::size_t>(u)];
    }
  }

  const Graph& g_;
  int n_;
  int k_;
  int max_color_ = -1;
  std::vector<int> color_;
  std::vector<int> blocked_;
  std::vector<int> sat_;
};

}  // namespace

VertexSet maximum_clique(const Graph& g) {
  const std::vector<int> order = degree_order(g);
  const Graph h = relabel(g, order);
  VertexSet found = CliqueSearch(h).run();
  VertexSet out;
  for (int v : found) out = out.with(order[static_cast<std::size_t>(v)]);
  return out;
}

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

Coloring dsatur_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(n), 0);
  int k = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const int sv = std::popcount(seen[static_cast<std::size_t>(v)]);
      const int sb = std::popcount(seen[static_cast<std::size_t>(best)]);
      if (sv > sb || (sv == sb && g.degree(v) > g.degree(best))) best = v;
    }
    const int c = std::countr_one(seen[static_cast<std::size_t>(best)]);
    color[static_cast<std::size_t>(best)] = c;
    k = std::max(k, c + 1);
    for (int u : g.neighbors(best)) seen[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
  }
  return Coloring{color, k};
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.order() == 0) return ChromaticResult{0, Coloring{}};
  const VertexSet clique = maximum_clique(g);
  Coloring upper = dsatur_coloring(g);
  const int lower = clique.size();
  for (int k = lower; k < upper.k; ++k) {
    ColoringSearch search(g, k);
    search.precolor(clique.to_vector());
    if (search.solve(g.order() - lower)) {
      return ChromaticResult{k, Coloring{search.colors(), k}};
    }
  }
  const int chi = upper.k;
  return ChromaticResult{chi, std::move(upper)};
}

std::optional<PerfectDivision> find_perfect_division(const Graph& g) {
  if (g.order() > kDivisionMaxOrder) {
    throw PreconditionError("find_perfect_division supports n <= " + std::to_string(kDivisionMaxOrder));
  }
  if (g.order() == 0) return std::nullopt;
  const detail::SubsetTables t(g);
  const std::uint64_t all = g.vertices().bits();
  const std::uint64_t a = detail::first_division(t, all);
  if (a == ~std::uint64_t{0}) return std::nullopt;
  return PerfectDivision{VertexSet(a), VertexSet(all & ~a), t.omega(all), t.omega(all & ~a)};
}

namespace {

bool divisible_with(const detail::SubsetTables& t, std::uint64_t all) {
  for (std::uint64_t s = 1; s <= all; ++s) {
    if (t.perfect(s)) continue;
    const int w = t.omega(s);
    bool found = false;
    for (std::uint64_t a = s; a != 0; a = (a - 1) & s) {
      if (t.perfect(a) && t.omega(s & ~a) < w) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool is_perfectly_divisible(const Graph& g) {
  if (g.order() > kDivisibilityMaxOrder) {
    throw PreconditionError("is_perfectly_divisible supports n <= " + std::to_string(kDivisibilityMaxOrder));
  }
  const detail::SubsetTables t(g);
  return divisible_with(t, g.vertices().bits());
}

ChromaticResult chi_bound_divisible(const Graph& g) {
  if (g.order() > kDivisibilityMaxOrder) {
    throw PreconditionError("chi_bound_divisible supports n <= " + std::to_string(kDivisibilityMaxOrder));
  }
  const detail::SubsetTables t(g);
  const std::uint64_t all = g.vertices().bits();
  if (!divisible_with(t, all)) throw PreconditionError("chi_bound_divisible: graph is not perfectly divisible");

  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  int offset = 0;
  for (std::uint64_t s = all; s != 0;) {
    const std::uint64_t a = detail::first_division(t, s);
    detail::ensure(a != ~std::uint64_t{0}, "chi_bound_divisible: divisible subset without a division");
    const VertexSet part(a);
    const ChromaticResult r = chromatic_number(induced(g, part));
    detail::ensure(r.chi == t.omega(a), "chi_bound_divisible: perfect part with chi != omega");
    int i = 0;
    for (int v : part) colors[static_cast<std::size_t>(v)] = offset + r.coloring.colors[static_cast<std::size_t>(i++)];
    offset += r.chi;
    s &= ~a;
  }
  const int w = t.omega(all);
  detail::ensure(offset <= w * (w + 1) / 2, "chi_bound_divisible: palette exceeds C(omega+1, 2)");
  return ChromaticResult{offset, Coloring{colors, offset}};
}

}  // namespace chibind
