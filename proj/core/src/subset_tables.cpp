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

#include "chibind/detail/subset_tables.hpp"

#include <algorithm>
#include <bit>

#include "chibind/errors.hpp"
#include "chibind/patterns.hpp"

namespace chibind::detail {

SubsetTables::SubsetTables(const Graph& g) : n_(g.order()) {
  if (n_ > kSubsetTableMaxOrder) {
    throw PreconditionError("subset tables need n <= " + std::to_string(kSubsetTableMaxOrder) +
                            ", got " + std::to_string(n_));
  }
  const std::size_t count = std::size_t{1} << n_;
  omega_.assign(count, 0);
  perfect_.assign(count, 1);
  for (std::uint64_t s = 1; s < count; ++s) {
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    omega_[s] = static_cast<std::uint8_t>(
        std::max<int>(omega_[rest], 1 + omega_[rest & g.neighbors(v).bits()]));

    bool ok = true;
    for (std::uint64_t r = s; r != 0 && ok; r &= r - 1) {
      ok = perfect_[s & ~(r & -r)] != 0;
    }
    if (ok && std::popcount(s) >= 5) {
      const VertexSet set(s);
      ok = !induces_odd_hole_exactly(g, set) && !induces_odd_antihole_exactly(g, set);
    }
    perfect_[s] = ok ? 1 : 0;
  }
}

std::uint64_t first_division(const SubsetTables& t, std::uint64_t s) {
  const int target = t.omega(s);
  std::vector<int> members;
  for (std::uint64_t r = s; r != 0; r &= r - 1) members.push_back(std::countr_zero(r));
  const int m = static_cast<int>(members.size());

  // Combinations of each size in lexicographic order of index tuples.
  std::vector<int> idx;
  for (int k = m; k >= 0; --k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t a = 0;
      for (int i : idx) a |= std::uint64_t{1} << members[static_cast<std::size_t>(i)];
      if (t.perfect(a) && t.omega(s & ~a) < target) return a;
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return ~std::uint64_t{0};
}

}  // namespace chibind::detail
