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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/error.hpp"
#include "cfkit/guard.hpp"
#include "cfkit/poset.hpp"
#include "cfkit/rough.hpp"
#include "cfkit/subset.hpp"

namespace cfkit {

/// A failed instance of the CF axiom: no G in the family satisfies
/// K ⊆ R̄(G) and G ⊆ R̄(F).
struct CFAxiomFailure {
  Subset family_member;
  Subset k;
};

namespace detail {

inline std::vector<Subset> upper_of_family(const GASpace& ga, const std::vector<Subset>& family) {
  std::vector<Subset> out;
  out.reserve(family.size());
  for (auto f : family) out.push_back(ga.upper(f));
  return out;
}

inline bool has_cf_witness(const std::vector<Subset>& family, const std::vector<Subset>& upper,
                           Subset k, Subset upper_f) {
  for (std::size_t g = 0; g < family.size(); ++g)
    if (k.subset_of(upper[g]) && family[g].subset_of(upper_f)) return true;
  return false;
}

/// Subsets of `s` by increasing size, then increasing mask; stops when `f`
/// returns true.
template <typename F>
bool any_subset_smallest_first(Subset s, F&& f) {
  for (std::size_t size = 0; size <= s.size(); ++size) {
    if (any_subset(s, [&](Subset k) { return k.size() == size && f(k); })) return true;
  }
  return false;
}

}  // namespace detail

/// First violation of the CF axiom over the family in the given order.
///
/// The oracle checks every K ⊆ R̄(F), the empty set included, and reports the
/// smallest failing K. The reduced engine checks only K = R̄(F): on a finite
/// universe any witness for R̄(F) also covers its subsets.
inline std::optional<CFAxiomFailure> cf_axiom_failure(const GASpace& ga,
                                                      const std::vector<Subset>& family,
                                                      Engine engine = Engine::reduced,
                                                      const Guards& g = {}) {
  const auto upper = detail::upper_of_family(ga, family);
  for (std::size_t f = 0; f < family.size(); ++f) {
    if (engine == Engine::reduced) {
      if (!detail::has_cf_witness(family, upper, upper[f], upper[f]))
        return CFAxiomFailure{family[f], upper[f]};
      continue;
    }
    enforce_guard("cf_axiom oracle", upper[f].size(), g.subset_iteration);
    std::optional<Subset> failing;
    detail::any_subset_smallest_first(upper[f], [&](Subset k) {
      if (detail::has_cf_witness(family, upper, k, upper[f])) return false;
      failing = k;
      return true;
    });
    if (failing) return CFAxiomFailure{family[f], *failing};
  }
  return std::nullopt;
}

/// A validated CF-approximation space (U, R, F): R transitive and the family
/// satisfies the CF axiom. The family is deduplicated and canonically sorted.
class CFSpace {
 public:
  CFSpace() = default;

  const GASpace& ga() const { return ga_; }
  const FinUniverse& universe() const { return ga_.universe(); }
  const std::vector<Subset>& family() const { return family_; }
  std::size_t family_size() const { return family_.size(); }
  const Subset& member(std::size_t i) const { return family_.at(i); }

  /// R̄(F) for the i-th family member.
  Subset upper(std::size_t i) const { return upper_.at(i); }
  const std::vector<Subset>& uppers() const { return upper_; }

  std::optional<std::size_t> index_of(Subset member) const {
    auto it = std::lower_bound(family_.begin(), family_.end(), member);
    if (it == family_.end() || *it != member) return std::nullopt;
    return static_cast<std::size_t>(it - family_.begin());
  }

  std::string format(Subset s) const { return universe().format(s); }

  friend bool operator==(const CFSpace& a, const CFSpace& b) {
    return a.ga_ == b.ga_ && a.family_ == b.family_;
  }

 private:
  friend CFSpace validate_cf_space(GASpace, std::vector<Subset>, Engine, const Guards&);

  GASpace ga_;
  std::vector<Subset> family_;
  std::vector<Subset> upper_;
};

/// Checks transitivity and the CF axiom. Failures carry the first offending
/// triple, or the family member with the smallest failing K.
inline CFSpace validate_cf_space(GASpace ga, std::vector<Subset> family,
                                 Engine engine = Engine::reduced, const Guards& g = {}) {
  for (auto f : family) ga.universe().check_subset(f);
  if (auto t = transitivity_violation(ga)) {
    const auto& u = ga.universe();
    throw ValidationError("NotTransitive",
                          "relation is not transitive: " + u.name((*t)[0]) + "R" + u.name((*t)[1]) +
                              ", " + u.name((*t)[1]) + "R" + u.name((*t)[2]) + " but not " +
                              u.name((*t)[0]) + "R" + u.name((*t)[2]),
                          {{"x", u.name((*t)[0])}, {"y", u.name((*t)[1])}, {"z", u.name((*t)[2])}});
  }
  family = canonical_family(std::move(family));
  auto failure = cf_axiom_failure(ga, family, engine, g);
  if (failure && engine == Engine::reduced) {
    // Same F fails under both engines; shrink K to the smallest failing one.
    const Subset upper_f = ga.upper(failure->family_member);
    if (upper_f.size() <= g.subset_iteration) {
      const auto upper = detail::upper_of_family(ga, family);
      detail::any_subset_smallest_first(upper_f, [&](Subset k) {
        if (detail::has_cf_witness(family, upper, k, upper_f)) return false;
        failure->k = k;
        return true;
      });
    }
  }
  if (failure) {
    const auto& u = ga.universe();
    throw ValidationError("CFAxiomFailed",
                          "CF axiom fails for F=" + u.format(failure->family_member) +
                              " with K=" + u.format(failure->k),
                          {{"F", u.format(failure->family_member)}, {"K", u.format(failure->k)}});
  }
  CFSpace s;
  s.upper_ = detail::upper_of_family(ga, family);
  s.ga_ = std::move(ga);
  s.family_ = std::move(family);
  return s;
}

// ---------------------------------------------------------------------------
// CF-closed sets

/// The four equivalent descriptions of a CF-closed set E.
enum class Characterization {
  definition,       // every finite K ⊆ E has F with K ⊆ R̄(F) ⊆ E and F ⊆ E
  family_below,     // {R̄(F) | F ⊆ E} is directed with union E
  some_subfamily,   // some subfamily has directed R̄-images with union E
  finite_witness,   // every finite K ⊆ E has F with K ⊆ R̄(F) ⊆ E
};

namespace detail {

/// Nonempty, and any two members are contained in a third member.
inline bool is_directed_family(const std::vector<Subset>& sets) {
  if (sets.empty()) return false;
  for (auto a : sets)
    for (auto b : sets) {
      const Subset both = a | b;
      if (std::none_of(sets.begin(), sets.end(), [&](Subset c) { return both.subset_of(c); }))
        return false;
    }
  return true;
}

inline Subset union_of(const std::vector<Subset>& sets) {
  Subset out;
  for (auto s : sets) out |= s;
  return out;
}

inline bool closed_by(const std::vector<Subset>& family, const std::vector<Subset>& upper, Subset e,
                      Characterization c, const Guards& g) {
  switch (c) {
    case Characterization::definition:
    case Characterization::finite_witness: {
      enforce_guard("is_cf_closed oracle", e.size(), g.subset_iteration);
      const bool need_member_inside = c == Characterization::definition;
      return !any_subset(e, [&](Subset k) {
        for (std::size_t f = 0; f < family.size(); ++f)
          if (k.subset_of(upper[f]) && upper[f].subset_of(e) &&
              (!need_member_inside || family[f].subset_of(e)))
            return false;
        return true;
      });
    }
    case Characterization::family_below: {
      std::vector<Subset> below;
      for (std::size_t f = 0; f < family.size(); ++f)
        if (family[f].subset_of(e)) below.push_back(upper[f]);
      return is_directed_family(below) && union_of(below) == e;
    }
    case Characterization::some_subfamily: {
      // Only members whose image lies inside E can take part in a union equal to E.
      Subset usable;
      for (std::size_t f = 0; f < family.size(); ++f)
        if (upper[f].subset_of(e)) usable.insert(f);
      enforce_guard("is_cf_closed subfamily search", usable.size(), g.subset_iteration + 6);
      return any_subset(usable, [&](Subset pick) {
        std::vector<Subset> images;
        pick.for_each([&](std::size_t f) { images.push_back(upper[f]); });
        return is_directed_family(images) && union_of(images) == e;
      });
    }
  }
  return false;
}

inline bool closed_reduced(const std::vector<Subset>& family, const std::vector<Subset>& upper, Subset e) {
  for (std::size_t f = 0; f < family.size(); ++f)
    if (family[f].subset_of(e) && upper[f] == e) return true;
  return false;
}

}  // namespace detail

/// Whether E satisfies the chosen characterisation of CF-closedness.
inline bool is_cf_closed_by(const CFSpace& s, Subset e, Characterization c, const Guards& g = {}) {
  s.universe().check_subset(e);
  return detail::closed_by(s.family(), s.uppers(), e, c, g);
}

/// CF-closedness of E. The oracle applies the definition over every K ⊆ E;
/// the reduced engine takes K = E, i.e. asks for F ⊆ E with R̄(F) = E.
inline bool is_cf_closed(const CFSpace& s, Subset e, Engine engine = Engine::reduced,
                         const Guards& g = {}) {
  s.universe().check_subset(e);
  if (engine == Engine::reduced) return detail::closed_reduced(s.family(), s.uppers(), e);
  return detail::closed_by(s.family(), s.uppers(), e, Characterization::definition, g);
}

/// CF-closed sets of an arbitrary (U, R, F) by filtering the powerset through
/// the definition. No CF axiom is required of the input.
inline std::vector<Subset> closed_sets_by_definition(const GASpace& ga, const std::vector<Subset>& family,
                                                     const Guards& g = {}) {
  enforce_guard("enumerate_cf_closed oracle", ga.size(), g.subset_iteration);
  const auto upper = detail::upper_of_family(ga, family);
  std::vector<Subset> out;
  for_each_subset(ga.all(), [&](Subset e) {
    if (detail::closed_by(family, upper, e, Characterization::definition, g)) out.push_back(e);
  });
  return out;
}

/// The CF-closed sets together with their inclusion order.
struct CFFamily {
  std::vector<Subset> sets;
  std::shared_ptr<const FinPoset> order;

  std::size_t size() const { return sets.size(); }
  std::optional<std::size_t> index_of(Subset e) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), e);
    if (it == sets.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - sets.begin());
  }
};

inline CFFamily make_cf_family(const FinUniverse& universe, std::vector<Subset> sets) {
  sets = canonical_family(std::move(sets));
  auto order = std::make_shared<const FinPoset>(
      FinPoset::by_inclusion(sets, [&](std::size_t i) { return universe.format(sets[i]); }));
  return CFFamily{std::move(sets), std::move(order)};
}

/// The family {R̄(F) | F ∈ F}, deduplicated.
inline std::vector<Subset> basis_sets(const CFSpace& s) { return canonical_family(s.uppers()); }

/// All CF-closed sets. The reduced engine collects {R̄(F)}, which is complete
/// on a finite universe because a directed family of subsets of a finite set
/// has a largest member. The oracle filters every E ⊆ U.
inline CFFamily enumerate_cf_closed(const CFSpace& s, Engine engine = Engine::reduced,
                                    const Guards& g = {}) {
  if (engine == Engine::reduced) return make_cf_family(s.universe(), basis_sets(s));
  return make_cf_family(s.universe(), closed_sets_by_definition(s.ga(), s.family(), g));
}

/// E1 << E2 in the closed-set domain, decided as: some F has E1 ⊆ R̄(F) and
/// F ⊆ E2.
inline bool cf_way_below(const CFSpace& s, Subset e1, Subset e2) {
  for (auto e : {e1, e2})
    if (!is_cf_closed(s, e))
      throw ValidationError("NotClosed", s.format(e) + " is not CF-closed", {{"E", s.format(e)}});
  for (std::size_t f = 0; f < s.family_size(); ++f)
    if (e1.subset_of(s.upper(f)) && s.member(f).subset_of(e2)) return true;
  return false;
}

/// Those R̄(F) admitting G with G ⊆ R̄(G) = R̄(F).
inline std::vector<Subset> cf_compacts(const CFSpace& s) {
  std::vector<Subset> out;
  for (std::size_t f = 0; f < s.family_size(); ++f)
    for (std::size_t gi = 0; gi < s.family_size(); ++gi)
      if (s.upper(gi) == s.upper(f) && s.member(gi).subset_of(s.upper(gi))) {
        out.push_back(s.upper(f));
        break;
      }
  return canonical_family(std::move(out));
}

/// R is a preorder. When it is, the compact closed sets must be exactly the
/// sets R̄(F).
inline bool is_topological(const CFSpace& s) {
  if (!relation_properties(s.ga()).preorder) return false;
  if (cf_compacts(s) != basis_sets(s))
    throw TheoremViolation("TopologicalCompactsMismatch",
                           "compact closed sets differ from {R̄(F)} in a topological space");
  return true;
}

/// The closed-set domain with its designated basis {R̄(F)}.
struct CFDomain {
  CFFamily family;
  Subset basis;  // indices into family.sets

  bool empty() const { return family.sets.empty(); }
  const FinPoset& order() const { return *family.order; }
};

/// Builds (C(U,R,F), ⊆) and checks that {R̄(F)} is a basis and the order is
/// continuous. An empty family gives the empty domain.
inline CFDomain domain_of(const CFSpace& s, const Guards& g = {}) {
  CFDomain d{enumerate_cf_closed(s), Subset{}};
  for (auto b : basis_sets(s)) {
    auto i = d.family.index_of(b);
    if (!i) throw TheoremViolation("BasisNotClosed", "R̄(F) is not CF-closed", {{"set", s.format(b)}});
    d.basis.insert(*i);
  }
  if (!is_basis(d.order(), d.basis) || !classify(d.order(), Engine::reduced, g).is_continuous)
    throw TheoremViolation("DomainNotContinuous", "closed-set domain failed the basis check");
  return d;
}

}  // namespace cfkit
