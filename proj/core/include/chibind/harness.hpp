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

#include <optional>
#include <string>
#include <vector>

#include "chibind/graph.hpp"

namespace chibind {

struct TargetInfo {
  std::string id;
  /// One-line statement of what is checked on every member.
  std::string statement;
  /// Class membership: forbidden patterns plus the extra conditions listed in
  /// `membership`.
  std::vector<std::string> free_of;
  bool connected = false;
  std::string membership;
  /// Largest order accepted for generated universes.
  int n_cap = 0;
};

const std::vector<TargetInfo>& verification_targets();
/// PreconditionError for an unknown id.
const TargetInfo& verification_target(const std::string& id);

struct VerifyOptions {
  std::string target;
  int n_min = 1;
  int n_max = 0;
  /// Restrict a generated universe to connected graphs on top of what the
  /// target itself requires.
  bool connected = false;
  /// Read graphs from a graph6 file instead of generating them.
  std::optional<std::string> input_path;
  /// Worker count; 0 means CHIBIND_THREADS, falling back to the hardware.
  int threads = 0;
};

struct Violation {
  std::string g6;
  std::string detail;
};

/// Worst observed value/bound among members of one clique number.
struct Extreme {
  std::string quantity;  // "chi" or "colors"
  int omega = 0;
  long value = 0;
  long bound = 0;
  std::string witness;
};

struct VerificationReport {
  std::string target;
  VerifyOptions options;
  long graphs = 0;
  long members = 0;
  long checked = 0;
  std::vector<Violation> violations;
  std::vector<Extreme> extremes;
  double seconds = 0;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
  /// Deterministic unless include_seconds is set.
  std::string to_json(bool include_seconds = false) const;
};

/// Worker count from CHIBIND_THREADS (positive integer), else the hardware
/// concurrency, else 1.
int default_thread_count();

VerificationReport verify(const VerifyOptions& options);

struct RenderedOutput {
  std::string text;
  std::string json;
};

/// Runs a coloring pipeline and renders the coloring with its certificate.
/// Pipeline precondition failures propagate as PreconditionError.
RenderedOutput color_one(const Graph& g, const std::string& pipeline);

/// Structural profile: invariants, induced catalog patterns, hole classes,
/// cutsets, homogeneous set and divisibility.
RenderedOutput analyze_one(const Graph& g);

}  // namespace chibind
