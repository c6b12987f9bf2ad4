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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chibind/colorers.hpp"
#include "chibind/enumerate.hpp"
#include "chibind/invariants.hpp"
#include "chibind/patterns.hpp"

namespace chibind {
namespace {

std::vector<Graph> members(int n, std::initializer_list<std::string_view> free_of) {
  std::vector<std::string> names(free_of.begin(), free_of.end());
  return filter_stream(generate(n, false), names).collect();
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

// Each iteration canonicalizes one random graph of the given order.
void BM_CanonicalCode(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int n = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (int i = 0; i < 256; ++i) graphs.push_back(random_graph(rng, n, 0.5));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalCode)->DenseRange(6, 11, 1);

// Materializes graphs from an already cached level.
void BM_StreamCachedLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  (void)canonical_codes(n);
  for (auto _ : state) {
    GraphStream s = generate(n, false);
    long count = 0;
    while (s.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_StreamCachedLevel)->DenseRange(6, 8, 1)->Unit(benchmark::kMillisecond);

void BM_ChromaticNumber(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const int n = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(rng, n, 0.5));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(graphs[i++ % graphs.size()]).chi);
}
BENCHMARK(BM_ChromaticNumber)->Arg(10)->Arg(20)->Arg(30)->Arg(40);

void BM_FindInducedP5(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const int n = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(rng, n, 0.5));
  const Graph& p5 = pattern("P5").graph;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(graphs[i++ % graphs.size()], p5));
}
BENCHMARK(BM_FindInducedP5)->Arg(10)->Arg(20)->Arg(40)->Arg(64);

void BM_PerfectlyDivisible(benchmark::State& state) {
  const std::vector<Graph> graphs = members(static_cast<int>(state.range(0)), {"P5", "C5", "K2,3"});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_perfectly_divisible(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_PerfectlyDivisible)->Arg(7)->Arg(8);

void BM_ColorP5K23(benchmark::State& state) {
  std::vector<Graph> graphs;
  for (const Graph& g : members(static_cast<int>(state.range(0)), {"P5", "K2,3"})) {
    if (clique_number(g) >= 2) graphs.push_back(g);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(color_p5_k23(graphs[i++ % graphs.size()]).certificate.colors_used);
}
BENCHMARK(BM_ColorP5K23)->Arg(8)->Arg(9);

}  // namespace
}  // namespace chibind

BENCHMARK_MAIN();
