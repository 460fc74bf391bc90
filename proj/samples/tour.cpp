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

// Short tour of the library: closed sets of a small space, its domain,
// and the correspondence between relations and monotone maps.

#include <iostream>

#include "cfkit/cfkit.hpp"

int main() {
  using namespace cfkit;

  const GASpace ga = GASpace::from_pairs(FinUniverse::numbered(4), {{0, 0}, {0, 1}, {1, 1}, {2, 2}, {3, 3}, {2, 3}});
  auto space = share(validate_cf_space(ga, {{}, {0}, {2}, {0, 2}}));

  const CFFamily closed = enumerate_cf_closed(*space);
  std::cout << closed.sets.size() << " closed sets:\n";
  for (const auto& s : closed.sets) std::cout << "  " << space->format(s) << "\n";

  const CFDomain d = domain_of(*space);
  const PosetClassReport kind = classify(d.order());
  std::cout << "algebraic: " << std::boolalpha << kind.is_algebraic << ", lattice: " << kind.is_continuous_lattice() << "\n";
  std::cout << hasse_dot(d.order(), "closed_sets");

  // Every approximable relation from the space to itself is induced by a
  // monotone map on its domain, and vice versa.
  const auto report = equivalence_report(space, space);
  std::cout << report.relation_count << " relations, " << report.map_count << " monotone maps\n";
  return report.certified() ? 0 : 1;
}
