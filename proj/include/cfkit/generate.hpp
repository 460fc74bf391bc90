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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfkit/cf_space.hpp"
#include "cfkit/error.hpp"
#include "cfkit/poset.hpp"
#include "cfkit/rough.hpp"
#include "cfkit/subset.hpp"

namespace cfkit {

/// Seeded generator. Draws are reduced with `%` rather than through the
/// standard distributions so sequences are identical across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw from [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// True with probability num/den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
  Subset subset(std::size_t n) { return Subset(engine_()) & Subset::full(n); }

 private:
  std::mt19937_64 engine_;
};

/// "a", "b", ..., "z", then "a1", "b1", ...
inline std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    out.push_back(s);
  }
  return out;
}

/// Each ordered pair related with probability num/den.
inline GASpace random_ga_space(std::size_t n, Rng& rng, std::size_t num = 1, std::size_t den = 3) {
  BoolMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m.set(x, y, rng.chance(num, den));
  return GASpace(FinUniverse::numbered(n), m);
}

inline GASpace random_transitive_space(std::size_t n, Rng& rng, bool reflexive = false,
                                       std::size_t num = 1, std::size_t den = 3) {
  GASpace s = transitive_closure(random_ga_space(n, rng, num, den));
  return reflexive ? reflexive_closure(s) : s;
}

/// Random naturally labelled poset: a random strict relation on i < j, then
/// its reflexive-transitive closure, then a random relabelling.
inline FinPoset random_poset(std::size_t n, Rng& rng, std::size_t num = 1, std::size_t den = 3) {
  std::vector<Subset> up(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i].insert(i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) up[i].insert(j);
  }
  for (std::size_t i = n; i-- > 0;) {
    Subset closed = up[i];
    up[i].for_each([&](std::size_t j) { closed |= up[j]; });
    up[i] = closed;
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return FinPoset::from_predicate(letter_labels(n), [&](std::size_t x, std::size_t y) {
    return up[perm[x]].contains(perm[y]);
  });
}

/// One representative of every poset with exactly n elements up to
/// isomorphism, in a fixed order. Labels are "a", "b", ...
inline std::vector<FinPoset> posets_of_size(std::size_t n) {
  if (n > 6) throw InputError("CatalogTooLarge", "poset catalog supports at most 6 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<FinPoset> reps;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Subset> up(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i) up[i] = Subset::singleton(i);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((code >> s) & 1U) up[slots[s].first].insert(slots[s].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      up[i].for_each([&](std::size_t j) {
        if (!up[j].subset_of(up[i])) transitive = false;
      });
    if (!transitive) continue;
    FinPoset p = FinPoset::from_predicate(letter_labels(n), [&](std::size_t x, std::size_t y) {
      return up[x].contains(y);
    });
    bool seen = false;
    for (const auto& r : reps)
      if (order_isomorphic(r, p)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(std::move(p));
  }
  return reps;
}

/// All posets with at most `max_n` elements up to isomorphism, by size.
inline std::vector<FinPoset> poset_catalog(std::size_t max_n) {
  std::vector<FinPoset> out;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (auto& p : posets_of_size(n)) out.push_back(std::move(p));
  return out;
}

struct GeneratedSpace {
  CFSpace space;
  std::size_t attempts = 0;
};

inline constexpr std::size_t kDefaultRetryBudget = 10000;

/// Random CF-space on n elements with a family of k distinct members.
///
/// Each attempt draws a fresh transitive relation (reflexive too when
/// `topological`) and k distinct members of size at most 3, and keeps the
/// first draw that passes validation. No repair is attempted.
inline GeneratedSpace generate_cf_space(std::size_t n, std::size_t k, std::uint64_t seed,
                                        bool topological = false,
                                        std::size_t budget = kDefaultRetryBudget) {
  if (n > 10) throw InputError("UniverseTooLarge", "generation supports at most 10 elements");
  if (k > 8) throw InputError("FamilyTooLarge", "generation supports at most 8 family members");
  if (k > (std::size_t{1} << n))
    throw InputError("FamilyTooLarge", "more family members requested than subsets exist");
  Rng rng(seed);
  const std::size_t max_member = std::min<std::size_t>(n, 3);
  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    GASpace ga = random_transitive_space(n, rng, topological);
    std::vector<Subset> family;
    std::size_t draws = 0;
    while (family.size() < k && draws++ < 64 * (k + 1)) {
      const std::size_t size = rng.below(max_member + 1);
      Subset f;
      while (f.size() < size) f.insert(rng.below(n));
      if (std::find(family.begin(), family.end(), f) == family.end()) family.push_back(f);
    }
    if (family.size() < k) continue;
    try {
      return GeneratedSpace{validate_cf_space(std::move(ga), std::move(family)), attempt};
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError("GenerationExhausted",
                        "no valid space after " + std::to_string(budget) + " attempts",
                        {{"attempts", std::to_string(budget)}});
}

}  // namespace cfkit
