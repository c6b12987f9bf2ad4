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
#include "chibind/errors.hpp"

namespace chibind {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw PreconditionError("graph6 long form is not supported (n=" + std::to_string(n) + ")");
  }
  std::string out(1, static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + group);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (group << (6 - filled)));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw PreconditionError("empty graph6 string");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw PreconditionError("graph6 byte " + std::to_string(b) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxGraph6Order) throw PreconditionError("graph6 long form is not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw PreconditionError("graph6 payload has " + std::to_string(text.size() - 1) + " bytes, expected " +
                            std::to_string(bytes));
  }
  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw PreconditionError("graph6 padding bits are not zero");
  }
  return std::move(b).build();
}

}  // namespace chibind
