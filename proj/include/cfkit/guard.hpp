// Copyright 2026 The cfkit Authors
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

#include <cstddef>
#include <cstdlib>
#include <string>

#include "cfkit/error.hpp"

namespace cfkit {

/// Which implementation path an operation should take. `reduced` is the
/// production path; `oracle` evaluates the defining formula literally and
/// is exponential.
enum class Engine { reduced, oracle };

/// Size limits for the exponential routines.
struct Guards {
  std::size_t subset_iteration = 10;  // directed-subset and powerset oracles
  std::size_t topology = 12;          // enumeration of R-open sets
  std::size_t map_enumeration = 6;    // monotone maps P -> Q
  std::size_t full_family = 12;       // all subsets with a top element
  std::size_t relation_family = 6;    // |F_i| for exhaustive relation search
  std::size_t relation_domain = 5;    // |C_i| for equivalence reports

  /// Defaults, with every limit replaced by CFKIT_GUARD_N when it is set.
  static Guards from_env() {
    Guards g;
    if (const char* env = std::getenv("CFKIT_GUARD_N")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        g.subset_iteration = g.topology = g.map_enumeration = g.full_family =
            g.relation_family = g.relation_domain = v;
      }
    }
    return g;
  }
};

inline void enforce_guard(const char* what, std::size_t size, std::size_t limit) {
  if (size > limit) throw GuardError(what, size, limit);
}

}  // namespace cfkit
