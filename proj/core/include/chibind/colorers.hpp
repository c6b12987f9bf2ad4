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
#include <string>
#include <vector>

#include "chibind/graph.hpp"
#include "chibind/invariants.hpp"

namespace chibind {

/// One pipeline step: the vertices it colored and the colors it put on them.
struct TraceStep {
  std::string step;
  VertexSet vertices;
  std::vector<int> palette;
};

struct BoundCertificate {
  std::string theorem;
  int omega = 0;
  long bound_value = 0;
  int colors_used = 0;
  std::vector<TraceStep> trace;
};

struct CertifiedColoring {
  Coloring coloring;
  BoundCertificate certificate;
};

/// Bound formulas; negative or zero values are returned as computed.
long bound_p5_k23(int omega);        // 2w^2 - w - 3
long bound_p5_k1_2k2(int omega);     // 3/2 (w^2 - w)
long bound_p5_k1_k1uk3(int omega);   // 3w + 11
long bound_wagon(int omega);         // (w^2 + w) / 2
long bound_k1uk3(int omega);         // 3w - 3

/// Shape of one component of a (P5,K3)-free graph: either bipartite or a
/// 5-cycle whose vertices are blown up into independent sets X1..X5 with X_i
/// complete to X_{i+1} and anticomplete to X_{i+2}.
struct SumnerComponent {
  VertexSet vertices;
  bool bipartite = false;
  std::array<VertexSet, 2> sides{};
  std::array<VertexSet, 5> blowup{};
};

/// PreconditionError unless g is (P5,K3)-free; InternalError if a component
/// fits neither shape.
std::vector<SumnerComponent> sumner_structure(const Graph& g);

/// At most 3 colors on (P5,K3)-free graphs; at most 2 iff bipartite.
Coloring color_sumner(const Graph& g);

/// At most (w^2 + w)/2 colors on 2K2-free graphs via a maximum clique and
/// pair buckets.
Coloring color_wagon_2k2_free(const Graph& g);

/// At most 3w - 3 colors on (P5,K1uK3)-free graphs with an edge.
Coloring color_k1_union_k3_free(const Graph& g);

/// (P5,K2,3)-free, w >= 2; at most 2w^2 - w - 3 colors.
CertifiedColoring color_p5_k23(const Graph& g);
/// Connected (P5,K1+2K2)-free, w >= 2; at most 3/2 (w^2 - w) colors.
CertifiedColoring color_p5_k1_2k2(const Graph& g);
/// (P5,K1+(K1uK3))-free; at most 3w + 11 colors.
CertifiedColoring color_p5_k1_k1k3(const Graph& g);

/// Pipeline ids accepted by run_pipeline: p5-k23, p5-k1-2k2, p5-k1-k1uk3,
/// sumner, wagon, k1uk3, divisible.
const std::vector<std::string>& pipeline_ids();
CertifiedColoring run_pipeline(const std::string& id, const Graph& g);

/// Every vertex lies in exactly one step and carries a color of that step's
/// palette.
bool trace_reconstructs(const Graph& g, const CertifiedColoring& result);

}  // namespace chibind
