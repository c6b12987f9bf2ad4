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

#include "chibind/colorers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chibind/detail/palette.hpp"
#include "chibind/errors.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

long bound_p5_k23(int w) { return 2L * w * w - w - 3; }
long bound_p5_k1_2k2(int w) { return 3L * w * (w - 1) / 2; }
long bound_p5_k1_k1uk3(int w) { return 3L * w + 11; }
long bound_wagon(int w) { return static_cast<long>(w) * (w + 1) / 2; }
long bound_k1uk3(int w) { return 3L * w - 3; }

namespace detail {

PaletteBuilder::PaletteBuilder(const Graph& g) : g_(g), color_(static_cast<std::size_t>(g.order()), -1) {}

std::vector<int> PaletteBuilder::allocate(int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(next_++);
  return out;
}

void PaletteBuilder::apply(const std::string& step, VertexSet vertices, const std::vector<int>& local,
                           const std::vector<int>& palette) {
  std::set<int> used;
  int i = 0;
  for (int v : vertices) {
    ensure(color_[static_cast<std::size_t>(v)] < 0, "palette: vertex colored twice");
    const int c = local[static_cast<std::size_t>(i++)];
    ensure(c >= 0 && c < static_cast<int>(palette.size()), "palette: local color outside its slice");
    color_[static_cast<std::size_t>(v)] = palette[static_cast<std::size_t>(c)];
    used.insert(palette[static_cast<std::size_t>(c)]);
  }
  trace_.push_back(TraceStep{step, vertices, std::vector<int>(used.begin(), used.end())});
}

void PaletteBuilder::reuse(const std::string& step, VertexSet vertices, const std::vector<int>& local,
                           std::vector<int>& donor) {
  const int classes = local.empty() ? 0 : *std::max_element(local.begin(), local.end()) + 1;
  while (static_cast<int>(donor.size()) < classes) donor.push_back(next_++);
  std::set<int> used;
  int i = 0;
  for (int v : vertices) {
    const int c = donor[static_cast<std::size_t>(local[static_cast<std::size_t>(i++)])];
    ensure(color_[static_cast<std::size_t>(v)] < 0, "palette: vertex colored twice");
    for (int u : g_.neighbors(v)) {
      if (color_[static_cast<std::size_t>(u)] == c) {
        fail_internal("palette reuse in step '" + step + "' clashes at edge " + std::to_string(u) + "-" +
                      std::to_string(v));
      }
    }
    color_[static_cast<std::size_t>(v)] = c;
    used.insert(c);
  }
  trace_.push_back(TraceStep{step, vertices, std::vector<int>(used.begin(), used.end())});
}

void PaletteBuilder::pick(const std::string& step, int v, const std::vector<int>& choices) {
  ensure(color_[static_cast<std::size_t>(v)] < 0, "palette: vertex colored twice");
  for (int c : choices) {
    bool clash = false;
    for (int u : g_.neighbors(v)) clash = clash || color_[static_cast<std::size_t>(u)] == c;
    if (clash) continue;
    color_[static_cast<std::size_t>(v)] = c;
    trace_.push_back(TraceStep{step, VertexSet::single(v), {c}});
    return;
  }
  fail_internal("step '" + step + "': no donor color fits vertex " + std::to_string(v));
}

void PaletteBuilder::import(const CertifiedColoring& part, VertexSet vertices, const std::vector<int>& color_map) {
  const std::vector<int> members = vertices.to_vector();
  auto lift = [&](VertexSet local) {
    VertexSet out;
    for (int i : local) out = out.with(members[static_cast<std::size_t>(i)]);
    return out;
  };
  VertexSet fresh;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int v = members[i];
    const int c = color_map[static_cast<std::size_t>(part.coloring.colors[i])];
    if (color_[static_cast<std::size_t>(v)] >= 0) {
      ensure(color_[static_cast<std::size_t>(v)] == c, "palette: merged pieces disagree on a shared vertex");
      continue;
    }
    color_[static_cast<std::size_t>(v)] = c;
    fresh = fresh.with(v);
    next_ = std::max(next_, c + 1);
  }
  for (const TraceStep& s : part.certificate.trace) {
    const VertexSet vs = lift(s.vertices) & fresh;
    if (vs.empty()) continue;
    std::set<int> pal;
    for (int v : vs) pal.insert(color_[static_cast<std::size_t>(v)]);
    trace_.push_back(TraceStep{s.step, vs, std::vector<int>(pal.begin(), pal.end())});
  }
}

CertifiedColoring PaletteBuilder::finish(const std::string& theorem, int omega, long bound) {
  for (int c : color_) ensure(c >= 0, "palette: pipeline left a vertex uncolored");
  std::map<int, int> remap;
  for (int& c : color_) {
    auto [it, inserted] = remap.try_emplace(c, static_cast<int>(remap.size()));
    c = it->second;
  }
  for (TraceStep& s : trace_) {
    std::set<int> pal;
    for (int c : s.palette) pal.insert(remap.at(c));
    s.palette.assign(pal.begin(), pal.end());
  }
  CertifiedColoring out;
  out.coloring = Coloring{color_, static_cast<int>(remap.size())};
  ensure(is_proper(g_, out.coloring), "palette: pipeline produced an improper coloring");
  out.certificate = BoundCertificate{theorem, omega, bound, out.coloring.k, trace_};
  if (out.coloring.k > bound) {
    fail_internal(theorem + ": used " + std::to_string(out.coloring.k) + " colors, bound is " + std::to_string(bound));
  }
  return out;
}

}  // namespace detail

namespace {

void require_free_of(const Graph& g, std::initializer_list<std::string_view> names, const char* who) {
  for (auto name : names) {
    if (auto e = find_induced(g, pattern(name).graph)) {
      throw PreconditionError(std::string(who) + ": graph induces " + std::string(name) + " at " + e->to_string());
    }
  }
}

// Two-coloring by BFS layers; nullopt if an odd cycle shows up.
std::optional<std::array<VertexSet, 2>> two_color(const Graph& g, VertexSet comp) {
  std::array<VertexSet, 2> side{};
  VertexSet seen = VertexSet::single(comp.min());
  VertexSet frontier = seen;
  int parity = 0;
  while (!frontier.empty()) {
    side[static_cast<std::size_t>(parity)] |= frontier;
    const VertexSet next = (neighborhood_of(g, frontier) & comp) - seen;
    seen |= next;
    frontier = next;
    parity ^= 1;
  }
  for (int s = 0; s < 2; ++s) {
    if (!is_independent(g, side[static_cast<std::size_t>(s)])) return std::nullopt;
  }
  return side;
}

}  // namespace

std::vector<SumnerComponent> sumner_structure(const Graph& g) {
  require_free_of(g, {"P5", "K3"}, "sumner_structure");
  std::vector<SumnerComponent> out;
  for (VertexSet comp : components(g)) {
    SumnerComponent sc;
    sc.vertices = comp;
    if (auto sides = two_color(g, comp)) {
      sc.bipartite = true;
      sc.sides = *sides;
      out.push_back(sc);
      continue;
    }
    const std::vector<int> members = comp.to_vector();
    const auto local = find_hole_of_length(induced(g, comp), 5);
    if (!local) detail::fail_internal("non-bipartite (P5,K3)-free component without a 5-hole");
    std::array<int, 5> hole{};
    for (int i = 0; i < 5; ++i) hole[static_cast<std::size_t>(i)] = members[static_cast<std::size_t>((*local)[static_cast<std::size_t>(i)])];
    for (int i = 0; i < 5; ++i) sc.blowup[static_cast<std::size_t>(i)] = VertexSet::single(hole[static_cast<std::size_t>(i)]);
    const VertexSet hs = VertexSet::of(std::vector<int>(hole.begin(), hole.end()));
    for (int x : comp - hs) {
      const VertexSet seen = g.neighbors(x) & hs;
      bool placed = false;
      for (int i = 0; i < 5 && !placed; ++i) {
        const VertexSet want{hole[static_cast<std::size_t>((i + 4) % 5)], hole[static_cast<std::size_t>((i + 1) % 5)]};
        if (seen == want) {
          sc.blowup[static_cast<std::size_t>(i)] = sc.blowup[static_cast<std::size_t>(i)].with(x);
          placed = true;
        }
      }
      if (!placed) detail::fail_internal("vertex " + std::to_string(x) + " fits no blown-up 5-cycle class");
    }
    for (int i = 0; i < 5; ++i) {
      const VertexSet xi = sc.blowup[static_cast<std::size_t>(i)];
      detail::ensure(is_independent(g, xi), "blown-up 5-cycle class is not independent");
      detail::ensure(is_complete_to(g, xi, sc.blowup[static_cast<std::size_t>((i + 1) % 5)]),
                     "consecutive blown-up classes are not complete");
      detail::ensure(is_anticomplete_to(g, xi, sc.blowup[static_cast<std::size_t>((i + 2) % 5)]),
                     "opposite blown-up classes are not anticomplete");
    }
    out.push_back(sc);
  }
  return out;
}

Coloring color_sumner(const Graph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  for (const SumnerComponent& sc : sumner_structure(g)) {
    if (sc.bipartite) {
      for (int s = 0; s < 2; ++s) {
        for (int v : sc.sides[static_cast<std::size_t>(s)]) colors[static_cast<std::size_t>(v)] = s;
      }
      continue;
    }
    static constexpr std::array<int, 5> kCycleColors{0, 1, 0, 1, 2};
    for (int i = 0; i < 5; ++i) {
      for (int v : sc.blowup[static_cast<std::size_t>(i)]) colors[static_cast<std::size_t>(v)] = kCycleColors[static_cast<std::size_t>(i)];
    }
  }
  const int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  Coloring out = compact(Coloring{colors, k});
  detail::ensure(is_proper(g, out) && out.k <= 3, "sumner colorer produced a bad coloring");
  return out;
}

Coloring color_wagon_2k2_free(const Graph& g) {
  require_free_of(g, {"2K2"}, "color_wagon_2k2_free");
  if (g.order() == 0) return Coloring{};
  const std::vector<int> k = maximum_clique(g).to_vector();
  const int w = static_cast<int>(k.size());
  const int pairs = w * (w - 1) / 2;
  auto pair_index = [&](int i, int j) {
    // Pairs (i, j), i < j, in lexicographic order.
    return i * (2 * w - i - 1) / 2 + (j - i - 1);
  };
  std::vector<int> bucket(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> missing;
    for (int i = 0; i < w; ++i) {
      if (k[static_cast<std::size_t>(i)] == v) {
        missing.assign(1, i);
        break;
      }
      if (!g.adjacent(v, k[static_cast<std::size_t>(i)])) missing.push_back(i);
    }
    if (missing.empty()) detail::fail_internal("vertex complete to a maximum clique");
    bucket[static_cast<std::size_t>(v)] =
        missing.size() == 1 || k[static_cast<std::size_t>(missing[0])] == v ? pairs + missing[0]
                                                                           : pair_index(missing[0], missing[1]);
  }
  Coloring out{bucket, pairs + w};
  if (!is_proper(g, out)) {
    // Buckets are independent on 2K2-free input; keep the bound if not.
    out = chromatic_number(g).coloring;
  }
  out = compact(out);
  detail::ensure(is_proper(g, out) && out.k <= bound_wagon(w), "wagon colorer exceeded its bound");
  return out;
}

namespace {

void color_k1k3_rec(const Graph& g, VertexSet s, std::vector<int>& colors, int& next) {
  if (s.empty()) return;
  const Graph h = induced(g, s);
  const std::vector<int> members = s.to_vector();
  if (h.size() == 0) {
    for (int v : s) colors[static_cast<std::size_t>(v)] = next;
    ++next;
    return;
  }
  if (clique_number(h) <= 2) {
    const Coloring c = color_sumner(h);
    for (std::size_t i = 0; i < members.size(); ++i) colors[static_cast<std::size_t>(members[i])] = next + c.colors[i];
    next += c.k;
    return;
  }
  int v = members.front();
  for (int u : s) {
    if ((g.neighbors(u) & s).size() > (g.neighbors(v) & s).size()) v = u;
  }
  const VertexSet rest = (s - g.neighbors(v)).without(v);
  const int base = next;
  next += 3;
  colors[static_cast<std::size_t>(v)] = base;
  if (!rest.empty()) {
    const Coloring c = color_sumner(induced(g, rest));
    int i = 0;
    for (int u : rest) colors[static_cast<std::size_t>(u)] = base + c.colors[static_cast<std::size_t>(i++)];
  }
  color_k1k3_rec(g, s & g.neighbors(v), colors, next);
}

}  // namespace

Coloring color_k1_union_k3_free(const Graph& g) {
  require_free_of(g, {"P5", "K1uK3"}, "color_k1_union_k3_free");
  if (g.size() == 0) throw PreconditionError("color_k1_union_k3_free: graph has no edge");
  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  color_k1k3_rec(g, g.vertices(), colors, next);
  Coloring out = compact(Coloring{colors, next});
  detail::ensure(is_proper(g, out) && out.k <= bound_k1uk3(clique_number(g)), "K1uK3 colorer exceeded 3w-3");
  return out;
}

bool trace_reconstructs(const Graph& g, const CertifiedColoring& result) {
  VertexSet covered;
  for (const TraceStep& s : result.certificate.trace) {
    if (covered.intersects(s.vertices)) return false;
    covered |= s.vertices;
    for (int v : s.vertices) {
      const int c = result.coloring.colors[static_cast<std::size_t>(v)];
      if (std::find(s.palette.begin(), s.palette.end(), c) == s.palette.end()) return false;
    }
  }
  return covered == g.vertices();
}

}  // namespace chibind
