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

#include "chibind/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "chibind/colorers.hpp"
#include "chibind/enumerate.hpp"
#include "chibind/errors.hpp"
#include "chibind/invariants.hpp"
#include "chibind/patterns.hpp"
#include "chibind/structure.hpp"

namespace chibind {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxListedViolations = 1000;

struct Sample {
  const char* quantity;
  int omega;
  long value;
  long bound;
};

struct Outcome {
  bool member = false;
  bool checked = false;
  std::vector<std::string> problems;
  std::vector<Sample> samples;
};

struct Target {
  TargetInfo info;
  std::function<bool(const Graph&)> extra;
  std::function<void(const Graph&, Outcome&)> check;
};

std::string hole_tag(const Hole5& h) {
  std::string out = "hole [";
  for (int i = 0; i < 5; ++i) out += (i ? "," : "") + std::to_string(h[static_cast<std::size_t>(i)]);
  return out + "]: ";
}

bool has_five_hole(const Graph& g) { return find_five_hole(g).has_value(); }
bool is_atom(const Graph& g) { return !find_clique_cutset(g).has_value(); }
bool has_edge_clique(const Graph& g) { return clique_number(g) >= 2; }

// Validity of a coloring is re-checked here rather than trusted.
void check_coloring(const Graph& g, const Coloring& c, long bound, Outcome& out, const std::string& who) {
  if (!is_proper(g, c)) out.problems.push_back(who + " produced an improper coloring");
  if (c.used() > bound) {
    out.problems.push_back(who + " used " + std::to_string(c.used()) + " colors, bound " + std::to_string(bound));
  }
  out.samples.push_back({"colors", clique_number(g), c.used(), bound});
}

std::function<void(const Graph&, Outcome&)> chi_check(std::function<long(int)> bound_of,
                                                      std::function<void(const Graph&, long, Outcome&)> extra) {
  return [bound_of, extra](const Graph& g, Outcome& out) {
    out.checked = true;
    const int w = clique_number(g);
    const long bound = bound_of(w);
    const ChromaticResult r = chromatic_number(g);
    if (r.chi > bound) {
      out.problems.push_back("chi=" + std::to_string(r.chi) + " exceeds bound " + std::to_string(bound) +
                             " at omega=" + std::to_string(w));
    }
    out.samples.push_back({"chi", w, r.chi, bound});
    if (extra) extra(g, bound, out);
  };
}

std::function<void(const Graph&, long, Outcome&)> certified(CertifiedColoring (*pipeline)(const Graph&),
                                                            const char* name) {
  return [pipeline, name](const Graph& g, long bound, Outcome& out) {
    const CertifiedColoring c = pipeline(g);
    check_coloring(g, c.coloring, bound, out, name);
    if (c.certificate.bound_value != bound) out.problems.push_back(std::string(name) + " certificate states a different bound");
    if (!trace_reconstructs(g, c)) out.problems.push_back(std::string(name) + " trace does not reconstruct the coloring");
  };
}

void check_sumner_structure(const Graph& g, Outcome& out) {
  VertexSet covered;
  for (const SumnerComponent& sc : sumner_structure(g)) {
    covered |= sc.vertices;
    if (sc.bipartite) {
      const bool ok = (sc.sides[0] | sc.sides[1]) == sc.vertices && !sc.sides[0].intersects(sc.sides[1]) &&
                      is_independent(g, sc.sides[0]) && is_independent(g, sc.sides[1]);
      if (!ok) out.problems.push_back("component " + sc.vertices.to_string() + " has a bad bipartition");
      continue;
    }
    VertexSet all;
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
      const VertexSet xi = sc.blowup[static_cast<std::size_t>(i)];
      const VertexSet next = sc.blowup[static_cast<std::size_t>((i + 1) % 5)];
      const VertexSet far = sc.blowup[static_cast<std::size_t>((i + 2) % 5)];
      ok = ok && !xi.empty() && !all.intersects(xi) && is_independent(g, xi);
      all |= xi;
      for (int v : xi) ok = ok && next.is_subset_of(g.neighbors(v)) && !g.neighbors(v).intersects(far);
    }
    if (!ok || all != sc.vertices) {
      out.problems.push_back("component " + sc.vertices.to_string() + " is not a blown-up 5-cycle");
    }
  }
  if (covered != g.vertices()) out.problems.push_back("structure does not cover every vertex");
}

template <typename Checker>
std::function<void(const Graph&, Outcome&)> per_hole(Checker checker) {
  return [checker](const Graph& g, Outcome& out) {
    out.checked = true;
    for (const Hole5& h : all_five_holes(g)) {
      const FiveHoleDecomposition dec = decompose_five_hole(g, h, false);
      for (const std::string& v : checker(g, dec)) out.problems.push_back(hole_tag(h) + v);
    }
  };
}

std::vector<Target> build_targets() {
  std::vector<Target> t;
  auto add = [&](TargetInfo info, std::function<bool(const Graph&)> extra, std::function<void(const Graph&, Outcome&)> check) {
    t.push_back(Target{std::move(info), std::move(extra), std::move(check)});
  };
  const int gen = kMaxGenerateOrder;
  const int div = 13;

  add({"divisible-p5-c5-k23", "every induced subgraph has a perfect division", {"P5", "C5", "K2,3"}, true, "", div},
      nullptr, [](const Graph& g, Outcome& out) {
        out.checked = true;
        if (!is_perfectly_divisible(g)) out.problems.push_back("not perfectly divisible");
      });
  add({"divisible-alpha2", "every induced subgraph has a perfect division", {}, false, "independence number at most 2", div},
      [](const Graph& g) { return independence_number(g) <= 2; },
      [](const Graph& g, Outcome& out) {
        out.checked = true;
        if (!is_perfectly_divisible(g)) out.problems.push_back("not perfectly divisible");
      });
  add({"chi-p5-k23", "chi <= 2w^2-w-3 and the p5-k23 pipeline stays within it", {"P5", "K2,3"}, false,
       "clique number at least 2", gen},
      has_edge_clique, chi_check(bound_p5_k23, certified(color_p5_k23, "p5-k23 pipeline")));
  add({"chi-p5-k1-2k2", "chi <= 3(w^2-w)/2 and the p5-k1-2k2 pipeline stays within it", {"P5", "K1+2K2"}, true,
       "clique number at least 2", gen},
      has_edge_clique, chi_check(bound_p5_k1_2k2, certified(color_p5_k1_2k2, "p5-k1-2k2 pipeline")));
  add({"chi-p5-k1-k1uk3", "chi <= 3w+11 and the p5-k1-k1uk3 pipeline stays within it", {"P5", "K1+(K1uK3)"}, false,
       "", gen},
      nullptr, chi_check(bound_p5_k1_k1uk3, certified(color_p5_k1_k1k3, "p5-k1-k1uk3 pipeline")));
  add({"chi-2k2", "chi <= (w^2+w)/2 and the 2K2 colorer stays within it", {"2K2"}, false, "", gen}, nullptr,
      chi_check(bound_wagon, [](const Graph& g, long bound, Outcome& out) {
        check_coloring(g, color_wagon_2k2_free(g), bound, out, "2K2 colorer");
      }));
  add({"chi-p5-k3", "chi <= 3, the triangle-free colorer uses at most 3 colors with a structure proof",
       {"P5", "K3"}, false, "", gen},
      nullptr, chi_check([](int) { return 3L; }, [](const Graph& g, long bound, Outcome& out) {
        check_coloring(g, color_sumner(g), bound, out, "triangle-free colorer");
        check_sumner_structure(g, out);
      }));
  add({"chi-p5-k1uk3", "chi <= 3w-3 and the K1uK3 colorer stays within it", {"P5", "K1uK3"}, false,
       "at least one edge", gen},
      has_edge_clique, chi_check(bound_k1uk3, [](const Graph& g, long bound, Outcome& out) {
        check_coloring(g, color_k1_union_k3_free(g), bound, out, "K1uK3 colorer");
      }));
  add({"dominating-p5", "a dominating clique or dominating induced P3 is found", {"P5"}, true, "", gen}, nullptr,
      [](const Graph& g, Outcome& out) {
        out.checked = true;
        const DominatingSet d = find_dominating_clique_or_p3(g);
        if ((d.set | neighborhood_of(g, d.set)) != g.vertices()) out.problems.push_back("set does not dominate");
        if (VertexSet::of(d.order) != d.set) out.problems.push_back("order does not list the set");
        if (d.kind == DominatingKind::clique) {
          if (d.set.empty() || !is_clique(g, d.set)) out.problems.push_back("dominating set is not a clique");
        } else {
          const bool p3 = d.order.size() == 3 && g.adjacent(d.order[0], d.order[1]) &&
                          g.adjacent(d.order[1], d.order[2]) && !g.adjacent(d.order[0], d.order[2]);
          if (!p3) out.problems.push_back("dominating set is not an induced P3");
        }
      });
  add({"hole-p5", "5-hole classes, levels and N^3 attachments in P5-free graphs", {"P5"}, false, "has a 5-hole", gen},
      has_five_hole, per_hole(check_p5_hole_lemma));
  add({"hole-p5-k23", "clique classes, alpha bounds and the S-clique partition around a 5-hole", {"P5", "K2,3"}, false,
       "has a 5-hole", gen},
      has_five_hole, per_hole(check_k23_hole_lemma));
  add({"hole-atom-p5-k23", "N^3 empty and N^2 components with alpha <= 2 in atoms", {"P5", "K2,3"}, true,
       "has a 5-hole, no clique cutset", gen},
      [](const Graph& g) { return has_five_hole(g) && is_atom(g); }, per_hole(check_k23_atom_lemma));
  add({"hole-p5-k1-k1uk3", "K3-free skip classes, independent groups and seer pairs in atoms",
       {"P5", "K1+(K1uK3)"}, true, "has a 5-hole, no clique cutset", gen},
      [](const Graph& g) { return has_five_hole(g) && is_atom(g); }, per_hole(check_k1k1k3_hole_lemma));
  add({"second-level-p5-k1-k1uk3", "N^2 splits into two triangle-free parts and N^3 is triangle-free",
       {"P5", "K1+(K1uK3)"}, true, "has a 5-hole, no clique cutset", gen},
      [](const Graph& g) { return has_five_hole(g) && is_atom(g); }, per_hole(check_k1k1k3_second_level_lemma));
  add({"antihole-p5-k1-k1uk3", "structure around a long odd antihole", {"P5", "C5", "K1+(K1uK3)"}, false,
       "has an odd antihole on at least 7 vertices", gen},
      [](const Graph& g) { return find_long_odd_antihole(g).has_value(); },
      [](const Graph& g, Outcome& out) {
        out.checked = true;
        const AntiholeDecomposition dec = decompose_odd_antihole(g, *find_long_odd_antihole(g));
        for (const std::string& v : check_antihole_lemma(g, dec)) out.problems.push_back(v);
      });
  add({"cutset-p5-c5-k23", "minimal cutsets of atoms", {"P5", "C5", "K2,3"}, true, "no clique cutset", gen}, is_atom,
      [](const Graph& g, Outcome& out) {
        out.checked = true;
        for (const std::string& v : check_c5_cutset_lemma(g)) out.problems.push_back(v);
      });
  add({"antihole-two-cliques", "an odd antihole is not the union of two cliques", {}, false, "is an odd antihole", gen},
      [](const Graph& g) { return induces_odd_antihole_exactly(g, g.vertices()); },
      [](const Graph& g, Outcome& out) {
        out.checked = true;
        if (!odd_antihole_not_two_cliques(g)) out.problems.push_back("splits into two cliques");
      });
  return t;
}

const std::vector<Target>& targets() {
  static const std::vector<Target> all = build_targets();
  return all;
}

const Target& find_target(const std::string& id) {
  for (const Target& t : targets()) {
    if (t.info.id == id) return t;
  }
  throw PreconditionError("unknown verification target '" + id + "'");
}

Outcome evaluate(const Target& t, const std::vector<Pattern>& forbidden, const Graph& g) {
  Outcome out;
  try {
    if (t.info.connected && !is_connected(g)) return out;
    for (const Pattern& p : forbidden) {
      if (find_induced(g, p.graph)) return out;
    }
    if (t.extra && !t.extra(g)) return out;
    out.member = true;
    t.check(g, out);
  } catch (const InternalError& e) {
    out.problems.push_back(std::string("internal error: ") + e.what());
  } catch (const PreconditionError& e) {
    out.problems.push_back(std::string("precondition rejected a class member: ") + e.what());
  }
  return out;
}

std::vector<Graph> universe(const VerifyOptions& o, const Target& t) {
  std::vector<Graph> graphs;
  if (o.input_path) {
    GraphStream s = read_graph6_file(*o.input_path);
    while (auto g = s.next()) {
      if (o.n_max > 0 && (g->order() < o.n_min || g->order() > o.n_max)) continue;
      if (g->order() > t.info.n_cap) {
        throw PreconditionError("graph of order " + std::to_string(g->order()) + " exceeds the cap " +
                                std::to_string(t.info.n_cap) + " of target " + t.info.id);
      }
      if (o.connected && !is_connected(*g)) continue;
      graphs.push_back(std::move(*g));
    }
    return graphs;
  }
  const int cap = std::min(t.info.n_cap, kMaxGenerateOrder);
  if (o.n_max < 1 || o.n_max > cap) {
    throw PreconditionError("target " + t.info.id + " accepts n in [1, " + std::to_string(cap) + "], got " +
                            std::to_string(o.n_max));
  }
  if (o.n_min < 1 || o.n_min > o.n_max) throw PreconditionError("n_min must lie in [1, n_max]");
  for (int n = o.n_min; n <= o.n_max; ++n) {
    GraphStream s = generate(n, o.connected || t.info.connected);
    while (auto g = s.next()) graphs.push_back(std::move(*g));
  }
  return graphs;
}

// value_a / bound_a > value_b / bound_b without floating point.
bool worse(long va, long ba, long vb, long bb) { return va * bb > vb * ba; }

double ratio(long value, long bound) {
  if (bound <= 0) return 0;
  return std::round(1e6 * static_cast<double>(value) / static_cast<double>(bound)) / 1e6;
}

}  // namespace

const std::vector<TargetInfo>& verification_targets() {
  static const std::vector<TargetInfo> infos = [] {
    std::vector<TargetInfo> out;
    for (const Target& t : targets()) out.push_back(t.info);
    return out;
  }();
  return infos;
}

const TargetInfo& verification_target(const std::string& id) { return find_target(id).info; }

int default_thread_count() {
  if (const char* env = std::getenv("CHIBIND_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

VerificationReport verify(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Target& t = find_target(options.target);
  std::vector<Pattern> forbidden;
  for (const std::string& name : t.info.free_of) forbidden.push_back(pattern(name));

  const std::vector<Graph> graphs = universe(options, t);
  std::vector<Outcome> outcomes(graphs.size());
  const int threads = std::max(1, options.threads > 0 ? options.threads : default_thread_count());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) outcomes[i] = evaluate(t, forbidden, graphs[i]);
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  VerificationReport r;
  r.target = t.info.id;
  r.options = options;
  r.graphs = static_cast<long>(graphs.size());
  std::map<std::pair<std::string, int>, Extreme> worst;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Outcome& o = outcomes[i];
    r.members += o.member ? 1 : 0;
    r.checked += o.checked ? 1 : 0;
    if (o.problems.empty() && o.samples.empty()) continue;
    const std::string g6 = encode_graph6(graphs[i]);
    for (const std::string& p : o.problems) r.violations.push_back({g6, p});
    for (const Sample& s : o.samples) {
      auto [it, fresh] = worst.try_emplace({s.quantity, s.omega}, Extreme{s.quantity, s.omega, s.value, s.bound, g6});
      Extreme& e = it->second;
      if (fresh) continue;
      if (worse(s.value, s.bound, e.value, e.bound) ||
          (!worse(e.value, e.bound, s.value, s.bound) && g6 < e.witness)) {
        e = Extreme{s.quantity, s.omega, s.value, s.bound, g6};
      }
    }
  }
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.g6 < b.g6; });
  for (auto& [key, e] : worst) r.extremes.push_back(e);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << target << ": " << checked << " checked of " << members << " members among " << graphs << " graphs, ";
  if (violations.empty()) {
    os << "no violations";
  } else {
    os << violations.size() << " violations of a proved statement (implementation bug; first " << violations[0].g6
       << ": " << violations[0].detail << ")";
  }
  return os.str();
}

std::string VerificationReport::to_json(bool include_seconds) const {
  const TargetInfo& info = verification_target(target);
  Json j;
  j["target"] = target;
  j["statement"] = info.statement;
  Json params;
  params["n_min"] = options.n_min;
  params["n_max"] = options.n_max;
  params["connected"] = options.connected || info.connected;
  params["source"] = options.input_path ? "file" : "generated";
  if (options.input_path) params["path"] = *options.input_path;
  std::string cls;
  for (const std::string& p : info.free_of) cls += (cls.empty() ? "" : ",") + p;
  params["free_of"] = cls;
  params["membership"] = info.membership;
  j["params"] = params;
  j["counts"] = Json{{"graphs", graphs}, {"members", members}, {"checked", checked}, {"violations", violations.size()}};
  Json vs = Json::array();
  for (std::size_t i = 0; i < violations.size() && i < kMaxListedViolations; ++i) {
    vs.push_back(Json{{"g6", violations[i].g6}, {"detail", violations[i].detail}});
  }
  j["violations"] = vs;
  Json ex = Json::array();
  for (const Extreme& e : extremes) {
    ex.push_back(Json{{"quantity", e.quantity}, {"omega", e.omega}, {"value", e.value}, {"bound", e.bound},
                      {"ratio", ratio(e.value, e.bound)}, {"witness", e.witness}});
  }
  j["extremes"] = ex;
  j["summary"] = summary();
  if (include_seconds) j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

namespace {

Json vertices_json(VertexSet s) { return Json(s.to_vector()); }

}  // namespace

RenderedOutput color_one(const Graph& g, const std::string& pipeline) {
  const CertifiedColoring c = run_pipeline(pipeline, g);
  const BoundCertificate& cert = c.certificate;
  Json j;
  j["pipeline"] = pipeline;
  j["g6"] = encode_graph6(g);
  j["n"] = g.order();
  j["colors"] = c.coloring.colors;
  j["colors_used"] = cert.colors_used;
  Json cj;
  cj["theorem"] = cert.theorem;
  cj["omega"] = cert.omega;
  cj["bound"] = cert.bound_value;
  cj["colors_used"] = cert.colors_used;
  Json trace = Json::array();
  for (const TraceStep& s : cert.trace) {
    trace.push_back(Json{{"step", s.step}, {"vertices", vertices_json(s.vertices)}, {"palette", s.palette}});
  }
  cj["trace"] = trace;
  j["certificate"] = cj;

  std::ostringstream os;
  os << "pipeline " << pipeline << " on " << describe(g) << "\n";
  os << "colors used: " << cert.colors_used << " (bound " << cert.bound_value << " at omega " << cert.omega << ", "
     << cert.theorem << ")\n";
  os << "coloring:";
  for (int v = 0; v < g.order(); ++v) os << ' ' << v << ':' << c.coloring.colors[static_cast<std::size_t>(v)];
  os << "\ntrace:\n";
  for (const TraceStep& s : cert.trace) {
    os << "  " << s.step << ' ' << s.vertices.to_string() << " palette [";
    for (std::size_t i = 0; i < s.palette.size(); ++i) os << (i ? "," : "") << s.palette[i];
    os << "]\n";
  }
  return {os.str(), j.dump(2) + "\n"};
}

RenderedOutput analyze_one(const Graph& g) {
  std::ostringstream os;
  Json j;
  const bool connected = is_connected(g);
  j["g6"] = encode_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["connected"] = connected;
  j["omega"] = clique_number(g);
  j["alpha"] = independence_number(g);
  j["chi"] = chromatic_number(g).chi;
  j["perfect"] = is_perfect(g);
  os << describe(g) << "\n";
  os << "omega " << j["omega"] << ", alpha " << j["alpha"] << ", chi " << j["chi"]
     << (j["perfect"].get<bool>() ? ", perfect" : ", not perfect") << (connected ? ", connected" : ", disconnected")
     << "\n";

  Json induced_patterns = Json::array();
  os << "induced patterns:";
  for (const Pattern& p : pattern_catalog()) {
    if (auto e = find_induced(g, p.graph)) {
      induced_patterns.push_back(Json{{"name", p.name}, {"embedding", e->map}});
      os << ' ' << p.name << e->to_string();
    }
  }
  os << "\n";
  j["induced"] = induced_patterns;

  if (auto hole = find_five_hole(g)) {
    const FiveHoleDecomposition dec = decompose_five_hole(g, *hole, false);
    Json classes = Json::object();
    os << "5-hole [" << dec.hole[0] << ',' << dec.hole[1] << ',' << dec.hole[2] << ',' << dec.hole[3] << ','
       << dec.hole[4] << "] classes:";
    for (int m = 1; m < 32; ++m) {
      const VertexSet c = dec.classes[static_cast<std::size_t>(m)];
      if (c.empty()) continue;
      std::string name = "N";
      for (int i = 0; i < 5; ++i) {
        if ((m >> i) & 1) name += std::to_string(i + 1);
      }
      classes[name] = vertices_json(c);
      os << ' ' << name << c.to_string();
    }
    os << "\n";
    Json levels = Json::array();
    for (VertexSet l : dec.levels) levels.push_back(vertices_json(l));
    j["five_hole"] = Json{{"hole", dec.hole}, {"classes", classes}, {"levels", levels}};
  } else {
    j["five_hole"] = nullptr;
  }

  if (connected && g.order() > 0) {
    if (auto cut = find_clique_cutset(g)) {
      j["clique_cutset"] = vertices_json(cut->cutset);
      os << "clique cutset " << cut->cutset.to_string() << "\n";
    } else {
      j["clique_cutset"] = nullptr;
      os << "no clique cutset\n";
    }
    Json cuts = Json::array();
    os << "minimal cutsets:";
    for (const CutsetReport& r : minimal_cutsets(g)) {
      cuts.push_back(vertices_json(r.cutset));
      os << ' ' << r.cutset.to_string();
    }
    os << "\n";
    j["minimal_cutsets"] = cuts;
    if (is_free(g, {"P5"})) {
      const DominatingSet d = find_dominating_clique_or_p3(g);
      j["dominating"] = Json{{"kind", d.kind == DominatingKind::clique ? "clique" : "p3"}, {"vertices", d.order}};
      os << "dominating " << (d.kind == DominatingKind::clique ? "clique " : "P3 ") << d.set.to_string() << "\n";
    }
  }

  if (auto h = find_homogeneous_set(g)) {
    j["homogeneous_set"] = vertices_json(*h);
    os << "homogeneous set " << h->to_string() << "\n";
  } else {
    j["homogeneous_set"] = nullptr;
    os << "no homogeneous set\n";
  }

  if (g.order() <= kDivisibilityMaxOrder) {
    const bool divisible = is_perfectly_divisible(g);
    j["perfectly_divisible"] = divisible;
    os << (divisible ? "perfectly divisible" : "not perfectly divisible");
    if (auto d = find_perfect_division(g)) {
      j["division"] = Json{{"a", vertices_json(d->a)}, {"b", vertices_json(d->b)}};
      os << "; division A=" << d->a.to_string() << " B=" << d->b.to_string();
    }
    os << "\n";
  }
  return {os.str(), j.dump(2) + "\n"};
}

}  // namespace chibind
