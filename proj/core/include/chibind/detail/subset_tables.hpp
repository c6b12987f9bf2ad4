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

#include <cstdint>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind::detail {

/// Largest order for which the per-subset tables are built.
inline constexpr int kSubsetTableMaxOrder = 22;

/// Clique number and perfection of every induced subgraph, indexed by the
/// subset bitmask. Perfection uses the fact that a graph is perfect iff it
/// has no induced subgraph that is itself an odd hole or an odd antihole.
class SubsetTables {
 public:
  explicit SubsetTables(const Graph& g);

  int order() const { return n_; }
  int omega(std::uint64_t s) const { return omega_[s]; }
  bool perfect(std::uint64_t s) const { return perfect_[s] != 0; }

 private:
  int n_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint8_t> perfect_;
};

/// A ⊆ s with G[A] perfect and ω(s \ A) < ω(s), scanning A by descending
/// size and then by ascending member list. Returns ~0 when none exists.
std::uint64_t first_division(const SubsetTables& t, std::uint64_t s);

}  // namespace chibind::detail
