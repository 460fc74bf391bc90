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

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cfkit/error.hpp"
#include "cfkit/guard.hpp"
#include "cfkit/subset.hpp"

namespace cfkit {

/// Generalized approximation space: a finite universe with an arbitrary
/// binary relation R. Nothing here assumes R is reflexive, serial or
/// symmetric.
class GASpace {
 public:
  GASpace() = default;

  GASpace(FinUniverse universe, const BoolMatrix& rel) : universe_(std::move(universe)) {
    const std::size_t n = universe_.size();
    if (rel.rows() != n || rel.cols() != n)
      throw InputError("DimensionMismatch",
                       "relation matrix is " + std::to_string(rel.rows()) + "x" +
                           std::to_string(rel.cols()) + " for a universe of " + std::to_string(n),
                       {{"rows", std::to_string(rel.rows())}, {"cols", std::to_string(rel.cols())}});
    succ_.assign(n, Subset{});
    pred_.assign(n, Subset{});
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (rel(x, y)) {
          succ_[x].insert(y);
          pred_[y].insert(x);
        }
  }

  static GASpace from_pairs(FinUniverse universe,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    BoolMatrix m(universe.size(), universe.size());
    for (auto [x, y] : pairs) {
      universe.check_element(x);
      universe.check_element(y);
      m.set(x, y);
    }
    return GASpace(std::move(universe), m);
  }

  static GASpace from_successors(FinUniverse universe, const std::vector<Subset>& succ) {
    BoolMatrix m(universe.size(), universe.size());
    for (std::size_t x = 0; x < succ.size(); ++x) succ[x].for_each([&](std::size_t y) { m.set(x, y); });
    return GASpace(std::move(universe), m);
  }

  const FinUniverse& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  Subset all() const { return universe_.all(); }

  bool related(std::size_t x, std::size_t y) const { return succ_[x].contains(y); }

  /// R_s(x) = {y | x R y}.
  Subset successors(std::size_t x) const {
    universe_.check_element(x);
    return succ_[x];
  }
  /// R_p(x) = {y | y R x}.
  Subset predecessors(std::size_t x) const {
    universe_.check_element(x);
    return pred_[x];
  }

  /// Upper approximation: elements whose successor set meets A.
  Subset upper(Subset a) const {
    universe_.check_subset(a);
    Subset out;
    for (std::size_t x = 0; x < size(); ++x)
      if (succ_[x].intersects(a)) out.insert(x);
    return out;
  }

  /// Lower approximation: elements whose successor set lies inside A.
  Subset lower(Subset a) const {
    universe_.check_subset(a);
    Subset out;
    for (std::size_t x = 0; x < size(); ++x)
      if (succ_[x].subset_of(a)) out.insert(x);
    return out;
  }

  BoolMatrix relation() const {
    BoolMatrix m(size(), size());
    for (std::size_t x = 0; x < size(); ++x) succ_[x].for_each([&](std::size_t y) { m.set(x, y); });
    return m;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x) succ_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
    return out;
  }

  friend bool operator==(const GASpace& a, const GASpace& b) {
    return a.universe_ == b.universe_ && a.succ_ == b.succ_;
  }

 private:
  FinUniverse universe_;
  std::vector<Subset> succ_;
  std::vector<Subset> pred_;
};

struct RelationProperties {
  bool reflexive = false;
  bool transitive = false;
  bool preorder = false;
};

/// First (x, y, z) with xRy, yRz and not xRz.
inline std::optional<std::array<std::size_t, 3>> transitivity_violation(const GASpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (!s.related(x, y)) continue;
      for (std::size_t z = 0; z < s.size(); ++z)
        if (s.related(y, z) && !s.related(x, z)) return std::array{x, y, z};
    }
  return std::nullopt;
}

inline RelationProperties relation_properties(const GASpace& s) {
  RelationProperties p;
  p.reflexive = true;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (!s.related(x, x)) p.reflexive = false;
  p.transitive = !transitivity_violation(s).has_value();
  p.preorder = p.reflexive && p.transitive;
  return p;
}

inline bool is_r_open(const GASpace& s, Subset a) { return a.subset_of(s.lower(a)); }
inline bool is_r_closed(const GASpace& s, Subset a) { return s.upper(a).subset_of(a); }

/// Smallest R-open set containing x: x together with everything reachable
/// from it along R.
inline Subset minimal_neighborhood(const GASpace& s, std::size_t x) {
  Subset reach = Subset::singleton(x);
  Subset frontier = reach;
  while (!frontier.empty()) {
    Subset next;
    frontier.for_each([&](std::size_t y) { next |= s.successors(y); });
    frontier = next - reach;
    reach |= next;
  }
  return reach;
}

namespace detail {

inline void check_alexandrov(const GASpace& s, const std::vector<Subset>& opens) {
  std::set<Subset> members(opens.begin(), opens.end());
  if (!members.count(Subset{}) || !members.count(s.all()))
    throw TheoremViolation("TopologyBroken", "induced topology misses the empty set or U");
  for (auto a : opens)
    for (auto b : opens)
      if (!members.count(a | b) || !members.count(a & b))
        throw TheoremViolation("TopologyBroken", "R-open sets not closed under union/intersection",
                               {{"A", s.universe().format(a)}, {"B", s.universe().format(b)}});
}

}  // namespace detail

/// All R-open sets, in canonical order, with the Alexandrov-topology
/// properties checked on the result.
///
/// The oracle filters the powerset. The reduced engine generates unions of
/// minimal neighborhoods.
inline std::vector<Subset> tau_r(const GASpace& s, Engine engine = Engine::reduced,
                                 const Guards& g = {}) {
  enforce_guard("tau_r", s.size(), g.topology);
  std::vector<Subset> opens;
  if (engine == Engine::oracle) {
    for_each_subset(s.all(), [&](Subset a) {
      if (is_r_open(s, a)) opens.push_back(a);
    });
  } else {
    std::set<Subset> acc{Subset{}};
    for (std::size_t x = 0; x < s.size(); ++x) {
      const Subset nx = minimal_neighborhood(s, x);
      std::vector<Subset> grown;
      for (auto a : acc) grown.push_back(a | nx);
      acc.insert(grown.begin(), grown.end());
    }
    opens.assign(acc.begin(), acc.end());
  }
  opens = canonical_family(std::move(opens));
  detail::check_alexandrov(s, opens);
  return opens;
}

/// Transitive closure of the relation (Warshall).
inline GASpace transitive_closure(const GASpace& s) {
  std::vector<Subset> succ(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) succ[x] = s.successors(x);
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t x = 0; x < s.size(); ++x)
      if (succ[x].contains(k)) succ[x] |= succ[k];
  return GASpace::from_successors(s.universe(), succ);
}

inline GASpace reflexive_closure(const GASpace& s) {
  std::vector<Subset> succ(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    succ[x] = s.successors(x);
    succ[x].insert(x);
  }
  return GASpace::from_successors(s.universe(), succ);
}

}  // namespace cfkit
