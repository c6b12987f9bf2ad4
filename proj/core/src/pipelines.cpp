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

#include <climits>
#include <functional>
#include <numeric>
#include <set>

#include "chibind/colorers.hpp"
#include "chibind/detail/palette.hpp"
#include "chibind/errors.hpp"
#include "chibind/patterns.hpp"
#include "chibind/structure.hpp"

namespace chibind {

namespace {

using detail::PaletteBuilder;
using AtomColorer = std::function<CertifiedColoring(const Graph&)>;

void require_free_of(const Graph& g, std::initializer_list<std::string_view> names, const char* who) {
  for (auto name : names) {
    if (auto e = find_induced(g, pattern(name).graph)) {
      throw PreconditionError(std::string(who) + ": graph induces " + std::string(name) + " at " + e->to_string());
    }
  }
}

std::vector<int> identity(int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> positions(const Coloring& c) { return c.colors; }

CertifiedColoring one_color(const Graph& h) {
  PaletteBuilder pb(h);
  if (h.order() > 0) {
    pb.apply("independent", h.vertices(), std::vector<int>(static_cast<std::size_t>(h.order()), 0), pb.allocate(1));
  }
  return pb.finish("", 0, LONG_MAX);
}

// Colors a connected graph by splitting on clique cutsets and merging the
// pieces through a palette permutation that agrees on the shared clique.
CertifiedColoring solve_connected(const Graph& h, const AtomColorer& atom) {
  if (h.order() <= 1 || h.size() == 0) return one_color(h);
  const auto cut = find_clique_cutset(h);
  if (!cut) return atom(h);

  const VertexSet first = cut->side_components.front() | cut->cutset;
  const VertexSet rest = h.vertices() - cut->side_components.front();
  const CertifiedColoring r1 = solve_connected(induced(h, first), atom);
  const CertifiedColoring r2 = solve_connected(induced(h, rest), atom);

  const std::vector<int> first_members = first.to_vector();
  const std::vector<int> rest_members = rest.to_vector();
  auto color_in = [](const CertifiedColoring& r, const std::vector<int>& members, int v) {
    const auto it = std::lower_bound(members.begin(), members.end(), v);
    return r.coloring.colors[static_cast<std::size_t>(it - members.begin())];
  };
  std::vector<int> map(static_cast<std::size_t>(r2.coloring.k), -1);
  std::set<int> taken;
  for (int v : cut->cutset) {
    const int c1 = color_in(r1, first_members, v);
    map[static_cast<std::size_t>(color_in(r2, rest_members, v))] = c1;
    taken.insert(c1);
  }
  int candidate = 0;
  for (int& m : map) {
    if (m >= 0) continue;
    while (taken.count(candidate) != 0) ++candidate;
    m = candidate;
    taken.insert(candidate);
  }

  PaletteBuilder pb(h);
  pb.import(r1, first, identity(r1.coloring.k));
  pb.import(r2, rest, map);
  return pb.finish("", 0, LONG_MAX);
}

CertifiedColoring solve(const Graph& g, const AtomColorer& atom, const std::string& theorem, int omega,
                        long bound) {
  PaletteBuilder pb(g);
  for (VertexSet comp : components(g)) {
    const CertifiedColoring r = solve_connected(induced(g, comp), atom);
    pb.import(r, comp, identity(r.coloring.k));
  }
  return pb.finish(theorem, omega, bound);
}

CertifiedColoring from_coloring(const Graph& g, const Coloring& c, const std::string& step,
                                const std::string& theorem, int omega, long bound) {
  PaletteBuilder pb(g);
  if (g.order() > 0) pb.apply(step, g.vertices(), positions(c), pb.allocate(c.k));
  return pb.finish(theorem, omega, bound);
}

void apply_divisible(PaletteBuilder& pb, const Graph& h, const std::string& step, VertexSet s,
                     std::vector<int>* donor_out) {
  if (s.empty()) return;
  const ChromaticResult r = chi_bound_divisible(induced(h, s));
  const std::vector<int> pal = pb.allocate(r.chi);
  pb.apply(step, s, r.coloring.colors, pal);
  if (donor_out != nullptr) donor_out->insert(donor_out->end(), pal.begin(), pal.end());
}

// Color blocks from the 5-hole decomposition of a (P5,K2,3)-free atom.
CertifiedColoring k23_atom(const Graph& h) {
  const int w = clique_number(h);
  if (w <= 2) return from_coloring(h, color_sumner(h), "sumner", "", w, LONG_MAX);
  const auto hole = find_five_hole(h);
  if (!hole) {
    const ChromaticResult r = chi_bound_divisible(h);
    return from_coloring(h, r.coloring, "divisible", "", w, LONG_MAX);
  }

  const FiveHoleDecomposition dec = decompose_five_hole(h, *hole, true);
  detail::ensure(dec.unreachable.empty() && dec.levels.size() <= 2, "hole atom: N^3(C) is nonempty");
  PaletteBuilder pb(h);

  struct Group {
    const char* name;
    VertexSet set;
  };
  const Group groups[] = {
      {"triples-123-234", dec.cls({1, 2, 3}) | dec.cls({2, 3, 4})},
      {"triples-345-145", dec.cls({3, 4, 5}) | dec.cls({1, 4, 5})},
      {"triple-125", dec.cls({1, 2, 5})},
      {"all-five", dec.all_five()},
  };
  std::vector<int> triple_donor;
  for (const Group& gr : groups) {
    if (gr.set.empty()) continue;
    const Graph piece = induced(h, gr.set);
    detail::ensure(independence_number(piece) <= 2, "hole atom: grouped class has alpha > 2");
    detail::ensure(clique_number(piece) <= w - 2, "hole atom: grouped class has clique number above w-2");
    apply_divisible(pb, h, gr.name, gr.set, std::string(gr.name) == "all-five" ? nullptr : &triple_donor);
  }

  const auto s = s_cliques(dec);
  std::array<std::vector<int>, 5> slices;
  std::vector<int> wide_donor = triple_donor;
  for (int i = 0; i < 5; ++i) {
    const VertexSet si = s[static_cast<std::size_t>(i)];
    detail::ensure(is_clique(h, si) && si.size() <= w - 1, "hole atom: S-clique too large or not a clique");
    detail::ensure(!h.neighbors(dec.v(i + 1)).intersects(si), "hole atom: v_i sees its S-clique");
    slices[static_cast<std::size_t>(i)] = pb.allocate(w - 1);
    pb.apply("s-clique-" + std::to_string(i + 1), si, identity(si.size()), slices[static_cast<std::size_t>(i)]);
    wide_donor.insert(wide_donor.end(), slices[static_cast<std::size_t>(i)].begin(), slices[static_cast<std::size_t>(i)].end());
  }
  for (int i = 0; i < 5; ++i) pb.pick("hole", dec.v(i + 1), slices[static_cast<std::size_t>(i)]);

  for (VertexSet b : components_within(h, dec.level(2))) {
    const Graph piece = induced(h, b);
    detail::ensure(independence_number(piece) <= 2, "hole atom: N^2 component has alpha > 2");
    const ChromaticResult r = chi_bound_divisible(piece);
    if (clique_number(piece) < w) {
      pb.reuse("second-level", b, r.coloring.colors, triple_donor);
    } else {
      detail::ensure((neighborhood_of(h, b) & dec.level(1)).is_subset_of(dec.all_five()),
                     "hole atom: full-clique N^2 component sees outside the all-five class");
      pb.reuse("second-level-full", b, r.coloring.colors, wide_donor);
    }
  }
  return pb.finish("", w, LONG_MAX);
}

void apply_k1k3(PaletteBuilder& pb, const Graph& h, const std::string& step, VertexSet s) {
  if (s.empty()) return;
  const Graph piece = induced(h, s);
  const Coloring c = piece.size() == 0 ? Coloring{std::vector<int>(static_cast<std::size_t>(s.size()), 0), 1}
                                       : color_k1_union_k3_free(piece);
  pb.apply(step, s, c.colors, pb.allocate(c.k));
}

CertifiedColoring k1k1k3_atom(const Graph& h) {
  const int w = clique_number(h);
  if (is_perfect(h)) {
    const ChromaticResult r = chromatic_number(h);
    detail::ensure(r.chi == w, "perfect atom with chi != omega");
    return from_coloring(h, r.coloring, "perfect", "", w, LONG_MAX);
  }
  PaletteBuilder pb(h);
  if (const auto hole = find_five_hole(h)) {
    const FiveHoleDecomposition dec = decompose_five_hole(h, *hole, true);
    detail::ensure(dec.unreachable.empty() && dec.levels.size() <= 3, "hole atom: vertices beyond N^3(C)");
    apply_k1k3(pb, h, "all-five", dec.all_five());

    std::vector<int> block;
    for (int i = 1; i <= 5; ++i) {
      const VertexSet x = dec.cls({i, i + 2});
      const std::vector<int> pal = pb.allocate(3);
      block.insert(block.end(), pal.begin(), pal.end());
      if (x.empty()) continue;
      pb.apply("skip-" + std::to_string(i), x, color_sumner(induced(h, x)).colors, pal);
    }
    for (int i = 1; i <= 5; ++i) {
      const VertexSet grp = dec.cls({i, i + 1, i + 2}) | dec.cls({i, i + 1, i + 3}) | dec.cls({i, i + 1, i + 2, i + 3});
      if (grp.empty()) continue;
      detail::ensure(is_independent(h, grp), "hole atom: triple/quad group is not independent");
      pb.apply("group-" + std::to_string(i), grp, std::vector<int>(static_cast<std::size_t>(grp.size()), 0), pb.allocate(1));
    }

    const SecondLevelSplit split = split_second_level(h, dec);
    if (!split.problems.empty()) detail::fail_internal("hole atom: " + split.problems.front());
    const VertexSet parts[] = {split.a, split.b, dec.level(3)};
    const char* names[] = {"second-level-a", "second-level-b", "third-level"};
    for (int p = 0; p < 3; ++p) {
      if (parts[p].empty()) continue;
      std::vector<int> donor(block.begin() + 3 * p, block.begin() + 3 * p + 3);
      pb.reuse(names[p], parts[p], color_sumner(induced(h, parts[p])).colors, donor);
      detail::ensure(donor.size() == 3, "hole atom: Sumner part needed more than 3 colors");
    }
    for (int i = 1; i <= 5; ++i) pb.pick("hole", dec.v(i), block);
    return pb.finish("", w, LONG_MAX);
  }

  const auto cycle = find_long_odd_antihole(h);
  detail::ensure(cycle.has_value(), "imperfect C5-free atom without a long odd antihole");
  const AntiholeDecomposition dec = decompose_odd_antihole(h, *cycle);
  detail::ensure(dec.beyond.empty() && dec.unclassified.empty(), "antihole atom: vertices outside A, S and T");
  const int len = static_cast<int>(cycle->size());
  std::vector<int> local(static_cast<std::size_t>(h.order()), -1);
  for (int i = 0; i < len; ++i) local[static_cast<std::size_t>((*cycle)[static_cast<std::size_t>(i)])] = i / 2;
  const VertexSet a = VertexSet::of(*cycle);
  std::vector<int> a_local;
  for (int v : a) a_local.push_back(local[static_cast<std::size_t>(v)]);
  pb.apply("antihole", a, a_local, pb.allocate((len + 1) / 2));
  apply_k1k3(pb, h, "complete-to-antihole", dec.s);
  for (std::size_t i = 0; i < dec.t_classes.size(); ++i) {
    const VertexSet ti = dec.t_classes[i];
    if (ti.empty()) continue;
    detail::ensure(is_independent(h, ti), "antihole atom: T_i is not independent");
    pb.apply("partial-" + std::to_string(i), ti, std::vector<int>(static_cast<std::size_t>(ti.size()), 0), pb.allocate(1));
  }
  return pb.finish("", w, LONG_MAX);
}

}  // namespace

CertifiedColoring color_p5_k23(const Graph& g) {
  require_free_of(g, {"P5", "K2,3"}, "color_p5_k23");
  const int w = clique_number(g);
  if (w < 2) throw PreconditionError("color_p5_k23: needs clique number at least 2");
  return solve(g, k23_atom, "chi-p5-k23", w, bound_p5_k23(w));
}

CertifiedColoring color_p5_k1_k1k3(const Graph& g) {
  require_free_of(g, {"P5", "K1+(K1uK3)"}, "color_p5_k1_k1k3");
  const int w = clique_number(g);
  return solve(g, k1k1k3_atom, "chi-p5-k1-k1uk3", w, bound_p5_k1_k1uk3(w));
}

CertifiedColoring color_p5_k1_2k2(const Graph& g) {
  require_free_of(g, {"P5", "K1+2K2"}, "color_p5_k1_2k2");
  if (!is_connected(g)) throw PreconditionError("color_p5_k1_2k2: graph is not connected");
  const int w = clique_number(g);
  if (w < 2) throw PreconditionError("color_p5_k1_2k2: needs clique number at least 2");

  PaletteBuilder pb(g);
  VertexSet done;
  auto wagon_part = [&](const std::string& step, VertexSet part) {
    part -= done;
    done |= part;
    if (part.empty()) return;
    const Coloring c = color_wagon_2k2_free(induced(g, part));
    pb.apply(step, part, c.colors, pb.allocate(c.k));
  };

  const DominatingSet dom = find_dominating_clique_or_p3(g);
  if (dom.kind == DominatingKind::p3) {
    for (int i = 0; i < 3; ++i) {
      wagon_part("neighbourhood-v" + std::to_string(i + 1), g.neighbors(dom.order[static_cast<std::size_t>(i)]));
    }
  } else if (dom.order.size() == 1) {
    const int v1 = dom.order.front();
    wagon_part("neighbourhood-v1", g.neighbors(v1));
    pb.apply("v1", VertexSet::single(v1), {0}, pb.allocate(1));
    done = done.with(v1);
  } else {
    wagon_part("neighbourhood-v1", g.neighbors(dom.order[0]));
    wagon_part("neighbourhood-v2", g.neighbors(dom.order[1]));
    for (std::size_t i = 2; i < dom.order.size(); ++i) {
      const VertexSet ti = g.neighbors(dom.order[i]) - done;
      done |= ti;
      if (ti.empty()) continue;
      detail::ensure(is_independent(g, ti), "dominating clique branch: T-part is not independent");
      pb.apply("far-v" + std::to_string(i + 1), ti, std::vector<int>(static_cast<std::size_t>(ti.size()), 0), pb.allocate(1));
    }
  }
  return pb.finish("chi-p5-k1-2k2", w, bound_p5_k1_2k2(w));
}

const std::vector<std::string>& pipeline_ids() {
  static const std::vector<std::string> ids = {"p5-k23", "p5-k1-2k2", "p5-k1-k1uk3", "sumner",
                                               "wagon",  "k1uk3",     "divisible"};
  return ids;
}

CertifiedColoring run_pipeline(const std::string& id, const Graph& g) {
  if (id == "p5-k23") return color_p5_k23(g);
  if (id == "p5-k1-2k2") return color_p5_k1_2k2(g);
  if (id == "p5-k1-k1uk3") return color_p5_k1_k1k3(g);
  const int w = clique_number(g);
  if (id == "sumner") return from_coloring(g, color_sumner(g), "sumner", "chi-p5-k3", w, 3);
  if (id == "wagon") return from_coloring(g, color_wagon_2k2_free(g), "wagon", "chi-2k2", w, bound_wagon(w));
  if (id == "k1uk3") {
    return from_coloring(g, color_k1_union_k3_free(g), "k1uk3", "chi-p5-k1uk3", w, bound_k1uk3(w));
  }
  if (id == "divisible") {
    return from_coloring(g, chi_bound_divisible(g).coloring, "divisible", "divisible", w, bound_wagon(w));
  }
  throw PreconditionError("unknown pipeline '" + id + "'");
}

}  // namespace chibind
