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

#include <string>
#include <vector>

#include "chibind/colorers.hpp"

namespace chibind::detail {

/// A coloring of some host graph under construction, with its trace. Colors
/// are plain integers handed out by allocate(); compaction happens in finish().
class PaletteBuilder {
 public:
  explicit PaletteBuilder(const Graph& g);

  std::vector<int> allocate(int count);

  /// Colors `vertices` (ascending) with palette[local[i]].
  void apply(const std::string& step, VertexSet vertices, const std::vector<int>& local,
             const std::vector<int>& palette);

  /// Colors `vertices` class by class with donor colors in order, extending
  /// `donor` with fresh colors when it runs short. Any clash with an already
  /// colored neighbour is an InternalError.
  void reuse(const std::string& step, VertexSet vertices, const std::vector<int>& local,
             std::vector<int>& donor);

  /// Gives v the first color of `choices` that no colored neighbour uses.
  void pick(const std::string& step, int v, const std::vector<int>& choices);

  /// Copies a finished sub-result on the given vertices (ascending order of
  /// vertices matches the sub-result's vertex order) through a color map.
  void import(const CertifiedColoring& part, VertexSet vertices, const std::vector<int>& color_map);

  int color(int v) const { return color_[static_cast<std::size_t>(v)]; }
  int next_color() const { return next_; }
  const std::vector<int>& colors() const { return color_; }

  /// Checks totality and properness, compacts colors and remaps the trace.
  CertifiedColoring finish(const std::string& theorem, int omega, long bound);

 private:
  const Graph& g_;
  std::vector<int> color_;
  std::vector<TraceStep> trace_;
  int next_ = 0;
};

}  // namespace chibind::detail
