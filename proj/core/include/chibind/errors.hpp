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

#include <stdexcept>
#include <string>

namespace chibind {

/// The caller handed an input outside the operation's domain (out-of-range
/// vertex, graph outside the required class, capacity exceeded, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural claim that is supposed to hold on every admitted input did
/// not. Always indicates a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail_internal(const std::string& what) {
  throw InternalError(what);
}

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace detail
}  // namespace chibind
