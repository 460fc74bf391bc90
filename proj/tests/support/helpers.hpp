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

#include <string>
#include <vector>

#include "cfkit/cfkit.hpp"
#include "oracles.hpp"

namespace cfkit::testing {

inline std::string fixture(const std::string& name) { return std::string(CFKIT_FIXTURE_DIR) + "/" + name; }

/// Relation of the six-element worked example; elements are "1".."6" at
/// indices 0..5.
inline GASpace ex1_ga() {
  const FinUniverse u = FinUniverse::numbered(6);
  BoolMatrix m(6, 6);
  for (auto [x, y] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {4, 3}, {5, 5}, {6, 6}})
    m.set(x - 1, y - 1);
  return GASpace(u, m);
}

inline std::vector<Subset> ex1_family() { return {Subset{}, Subset{0}, Subset{0, 1}, Subset{4}, Subset{5}}; }

inline CFSpace ex1() { return validate_cf_space(ex1_ga(), ex1_family()); }

inline FinPoset chain(std::size_t n) {
  return FinPoset::from_predicate(letter_labels(n), [](std::size_t x, std::size_t y) { return x <= y; });
}

inline FinPoset antichain(std::size_t n) {
  return FinPoset::from_predicate(letter_labels(n), [](std::size_t x, std::size_t y) { return x == y; });
}

inline oracle::Matrix to_oracle(const GASpace& s) {
  oracle::Matrix r(s.size(), std::vector<bool>(s.size()));
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) r[x][y] = s.related(x, y);
  return r;
}

inline oracle::Matrix to_oracle(const FinPoset& p) {
  oracle::Matrix r(p.size(), std::vector<bool>(p.size()));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) r[x][y] = p.leq(x, y);
  return r;
}

inline oracle::Mask to_mask(Subset s) { return static_cast<oracle::Mask>(s.mask()); }

inline std::vector<oracle::Mask> to_masks(const std::vector<Subset>& family) {
  std::vector<oracle::Mask> out;
  for (auto f : family) out.push_back(to_mask(f));
  return out;
}

inline std::vector<oracle::Mask> sorted_masks(const std::vector<Subset>& family) {
  auto out = to_masks(family);
  std::sort(out.begin(), out.end());
  return out;
}

/// Family members of a transitive relation drawn at random, without any CF
/// filtering; used to probe the validator on invalid inputs too.
inline std::vector<Subset> random_family(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(rng.subset(n));
  return out;
}

}  // namespace cfkit::testing
