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

#include "chibind/enumerate.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <mutex>

#include "chibind/errors.hpp"
#include "chibind/invariants.hpp"

namespace chibind {

namespace {

using Rows = std::array<std::uint64_t, kMaxCanonicalOrder>;

struct Partition {
  std::array<std::uint64_t, kMaxCanonicalOrder> cells{};
  int count = 0;
};

class Canonicalizer {
 public:
  Canonicalizer(const Rows& rows, int n) : rows_(rows), n_(n) {}

  std::uint64_t run() {
    Partition p;
    p.cells[0] = VertexSet::first(n_).bits();
    p.count = 1;
    search(p);
    return best_;
  }

 private:
  int count_in(int v, std::uint64_t set) const {
    return std::popcount(rows_[static_cast<std::size_t>(v)] & set);
  }

  // Equitable refinement: split every cell by neighbour counts into a
  // splitter cell, restarting after each split. Subcells keep ascending count
  // order, so the result depends only on the graph and the cell order.
  void refine(Partition& p) const {
    int w = 0;
    while (w < p.count) {
      const std::uint64_t splitter = p.cells[static_cast<std::size_t>(w)];
      Partition next;
      bool split = false;
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t cell = p.cells[static_cast<std::size_t>(c)];
        if (std::popcount(cell) == 1) {
          next.cells[static_cast<std::size_t>(next.count++)] = cell;
          continue;
        }
        std::array<std::uint64_t, kMaxCanonicalOrder + 1> by{};
        for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          by[static_cast<std::size_t>(count_in(v, splitter))] |= std::uint64_t{1} << v;
        }
        int parts = 0;
        for (std::uint64_t b : by) {
          if (b == 0) continue;
          next.cells[static_cast<std::size_t>(next.count++)] = b;
          ++parts;
        }
        split = split || parts > 1;
      }
      p = next;
      w = split ? 0 : w + 1;
    }
  }

  std::uint64_t leaf_code(const Partition& p) const {
    std::array<int, kMaxCanonicalOrder> at{};
    for (int i = 0; i < p.count; ++i) at[static_cast<std::size_t>(i)] = std::countr_zero(p.cells[static_cast<std::size_t>(i)]);
    std::uint64_t code = 0;
    for (int j = 1; j < n_; ++j) {
      const std::uint64_t row = rows_[static_cast<std::size_t>(at[static_cast<std::size_t>(j)])];
      for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> at[static_cast<std::size_t>(i)]) & 1U);
    }
    return code;
  }

  bool twins(int u, int w) const {
    const std::uint64_t nu = rows_[static_cast<std::size_t>(u)] & ~(std::uint64_t{1} << w);
    const std::uint64_t nw = rows_[static_cast<std::size_t>(w)] & ~(std::uint64_t{1} << u);
    return nu == nw;
  }

  void search(Partition p) {
    refine(p);
    int t = 0;
    while (t < p.count && std::popcount(p.cells[static_cast<std::size_t>(t)]) == 1) ++t;
    if (t == p.count) {
      best_ = std::min(best_, leaf_code(p));
      return;
    }
    const std::uint64_t target = p.cells[static_cast<std::size_t>(t)];
    std::uint64_t tried = 0;
    for (std::uint64_t rest = target; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      bool skip = false;
      for (std::uint64_t tr = tried; tr != 0 && !skip; tr &= tr - 1) skip = twins(u, std::countr_zero(tr));
      if (skip) continue;
      tried |= std::uint64_t{1} << u;

      Partition child;
      for (int c = 0; c < p.count; ++c) {
        if (c == t) {
          child.cells[static_cast<std::size_t>(child.count++)] = std::uint64_t{1} << u;
          child.cells[static_cast<std::size_t>(child.count++)] = target & ~(std::uint64_t{1} << u);
        } else {
          child.cells[static_cast<std::size_t>(child.count++)] = p.cells[static_cast<std::size_t>(c)];
        }
      }
      search(child);
    }
  }

  const Rows& rows_;
  int n_;
  std::uint64_t best_ = ~std::uint64_t{0};
};

void require_canonical_order(int n) {
  if (n > kMaxCanonicalOrder) {
    throw PreconditionError("canonical codes support at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
}

Rows rows_of(const Graph& g) {
  Rows rows{};
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
  return rows;
}

std::vector<std::uint64_t> next_level(const std::vector<std::uint64_t>& prev, int n) {
  const int m = n - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t code : prev) {
    const Graph h = graph_from_code(m, code);
    Rows rows = rows_of(h);
    int min_degree = m;
    for (int v = 0; v < m; ++v) min_degree = std::min(min_degree, h.degree(v));
    // The new vertex must have minimum degree; every graph arises this way by
    // deleting one of its minimum-degree vertices.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const int k = std::popcount(mask);
      if (k > min_degree + 1) continue;
      bool ok = true;
      for (int v = 0; v < m && ok; ++v) {
        ok = h.degree(v) + static_cast<int>((mask >> v) & 1U) >= k;
      }
      if (!ok) continue;
      Rows ext = rows;
      for (int v = 0; v < m; ++v) {
        if ((mask >> v) & 1U) ext[static_cast<std::size_t>(v)] |= std::uint64_t{1} << m;
      }
      ext[static_cast<std::size_t>(m)] = mask;
      out.push_back(Canonicalizer(ext, n).run());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  require_canonical_order(g.order());
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  require_canonical_order(n);
  GraphBuilder b(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1U) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::uint64_t canonical_code(const Graph& g) {
  require_canonical_order(g.order());
  if (g.order() <= 1) return 0;
  return Canonicalizer(rows_of(g), g.order()).run();
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

const std::vector<std::uint64_t>& canonical_codes(int n) {
  if (n < 0 || n > kMaxGenerateOrder) {
    throw PreconditionError("generation supports 0 <= n <= " + std::to_string(kMaxGenerateOrder));
  }
  static std::mutex mu;
  static std::map<int, std::vector<std::uint64_t>> levels;
  std::lock_guard<std::mutex> lock(mu);
  if (levels.empty()) {
    levels[0] = {0};
    levels[1] = {0};
  }
  for (int k = 2; k <= n; ++k) {
    if (levels.count(k) == 0) levels[k] = next_level(levels[k - 1], k);
  }
  return levels[n];
}

bool StreamFilter::accepts(const Graph& g) const {
  if (connected && !is_connected(g)) return false;
  for (const Pattern& p : free_of) {
    if (find_induced(g, p.graph)) return false;
  }
  if (omega_min > 0 || omega_max != INT_MAX) {
    const int w = clique_number(g);
    if (w < omega_min || w > omega_max) return false;
  }
  return true;
}

GraphStream::GraphStream(Source source) : source_(std::move(source)) {}

std::optional<Graph> GraphStream::next() {
  while (auto g = source_()) {
    const bool ok = std::all_of(filters_.begin(), filters_.end(), [&](const StreamFilter& f) { return f.accepts(*g); });
    if (ok) return g;
  }
  return std::nullopt;
}

GraphStream& GraphStream::where(StreamFilter filter) {
  filters_.push_back(std::move(filter));
  return *this;
}

std::vector<Graph> GraphStream::collect() {
  std::vector<Graph> out;
  while (auto g = next()) out.push_back(std::move(*g));
  return out;
}

GraphStream generate(int n, bool connected_only) {
  const std::vector<std::uint64_t>* codes = &canonical_codes(n);
  auto index = std::make_shared<std::size_t>(0);
  GraphStream s([codes, index, n]() -> std::optional<Graph> {
    if (*index >= codes->size()) return std::nullopt;
    return graph_from_code(n, (*codes)[(*index)++]);
  });
  if (connected_only) {
    StreamFilter f;
    f.connected = true;
    s.where(f);
  }
  return s;
}

GraphStream read_graph6_file(const std::string& path) {
  auto in = std::make_shared<std::ifstream>(path);
  if (!*in) throw PreconditionError("cannot open graph6 file '" + path + "'");
  auto line_no = std::make_shared<int>(0);
  return GraphStream([in, line_no, path]() -> std::optional<Graph> {
    std::string line;
    while (std::getline(*in, line)) {
      ++*line_no;
      if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      try {
        return decode_graph6(line);
      } catch (const PreconditionError& e) {
        throw PreconditionError(path + ":" + std::to_string(*line_no) + ": " + e.what());
      }
    }
    return std::nullopt;
  });
}

GraphStream from_graphs(std::vector<Graph> graphs) {
  auto data = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto index = std::make_shared<std::size_t>(0);
  return GraphStream([data, index]() -> std::optional<Graph> {
    if (*index >= data->size()) return std::nullopt;
    return (*data)[(*index)++];
  });
}

GraphStream filter_stream(GraphStream s, const std::vector<std::string>& free_of, StreamFilter predicates) {
  for (const std::string& name : free_of) predicates.free_of.push_back(pattern(name));
  s.where(std::move(predicates));
  return s;
}

}  // namespace chibind
