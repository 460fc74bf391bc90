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
#include <memory>
#include <string>
#include <vector>

#include "cfkit/cf_space.hpp"
#include "cfkit/error.hpp"
#include "cfkit/guard.hpp"
#include "cfkit/poset.hpp"
#include "cfkit/rough.hpp"
#include "cfkit/subset.hpp"

namespace cfkit {

/// How the family of a space built from a poset is chosen: all singletons,
/// or every nonempty subset that has a greatest element.
enum class FamilyMode { canonical, full };

namespace detail {

/// Rebuild a validation failure of a construction that is proven to succeed.
template <typename F>
auto expect_valid(const char* what, F&& build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    throw TheoremViolation("ConstructionInvalid",
                           std::string(what) + " produced an invalid space: " + e.what(), e.witness());
  }
}

inline std::vector<Subset> family_for(const FinPoset& order, Subset carrier, FamilyMode mode,
                                      const Guards& g) {
  std::vector<Subset> family;
  if (mode == FamilyMode::canonical) {
    carrier.for_each([&](std::size_t x) { family.push_back(Subset::singleton(x)); });
    return family;
  }
  enforce_guard("full family", carrier.size(), g.full_family);
  for_each_subset(carrier, [&](Subset f) {
    if (!f.empty() && order.maximum(f)) family.push_back(f);
  });
  return family;
}

}  // namespace detail

/// (L, <<, F_L) for a finite poset L. Closed sets of the result are the
/// way-down sets ⇓x.
inline CFSpace cf_space_from_domain(const FinPoset& l, FamilyMode mode = FamilyMode::canonical,
                                    const Guards& g = {}) {
  GASpace ga(FinUniverse(l.labels()), way_below_relation(l));
  auto family = detail::family_for(l, l.elements(), mode, g);
  return detail::expect_valid("cf_space_from_domain",
                              [&] { return validate_cf_space(std::move(ga), std::move(family)); });
}

/// Compares the closed sets of (L, <<, F_L) with {⇓x | x ∈ L}, each side
/// computed by its own route. Oracle engines are used within the guards.
inline bool verify_closed_sets_are_waydown(const FinPoset& l, const Guards& g = {}) {
  const bool small = l.size() <= g.subset_iteration;
  const Engine engine = small ? Engine::oracle : Engine::reduced;
  const CFSpace s = cf_space_from_domain(l);
  const auto closed = enumerate_cf_closed(s, engine, g).sets;
  std::vector<Subset> waydown;
  for (std::size_t x = 0; x < l.size(); ++x) waydown.push_back(way_below_set(l, x, engine, g));
  return closed == canonical_family(std::move(waydown));
}

/// Witness of L ≅ C(L, <<, F_L) via x ↦ ⇓x.
struct Representation {
  CFSpace space;
  CFDomain domain;
  std::vector<Subset> waydown;         // ⇓x for each x of L
  std::vector<std::size_t> iso;        // x ↦ index of ⇓x in domain.family.sets
};

/// Builds the canonical space for L and certifies that x ↦ ⇓x is an order
/// isomorphism onto its closed-set domain. IsoCheckFailed means a bug.
inline Representation representation_roundtrip(const FinPoset& l, const Guards& g = {}) {
  Representation r{cf_space_from_domain(l, FamilyMode::canonical, g), {}, {}, {}};
  r.domain = domain_of(r.space, g);
  for (std::size_t x = 0; x < l.size(); ++x) {
    const Subset w = way_below_set(l, x);
    auto i = r.domain.family.index_of(w);
    if (!i)
      throw TheoremViolation("IsoCheckFailed", "⇓" + l.label(x) + " is not a closed set",
                             {{"x", l.label(x)}});
    r.waydown.push_back(w);
    r.iso.push_back(*i);
  }
  if (!is_order_isomorphism(l, r.domain.order(), r.iso) || !order_isomorphic(l, r.domain.order()))
    throw TheoremViolation("IsoCheckFailed", "x ↦ ⇓x is not an order isomorphism");
  return r;
}

/// Topological space over the compact elements of L.
struct AlgebraicRepresentation {
  CFSpace space;
  std::vector<std::size_t> carrier;  // carrier index ↦ element of L
  CFDomain domain;
  std::vector<std::size_t> iso;      // x ↦ index of ↓x ∩ K(L) in domain.family.sets
};

/// (K(L), <=, F_K(L)). Checks that the result is topological, that its
/// closed sets are {↓x ∩ K(L)}, and that x ↦ ↓x ∩ K(L) is an isomorphism.
inline AlgebraicRepresentation algebraic_cf_space(const FinPoset& l,
                                                  FamilyMode mode = FamilyMode::canonical,
                                                  const Guards& g = {}) {
  const Subset k = compacts(l);
  const FinPoset sub = l.restrict(k);
  AlgebraicRepresentation r;
  r.carrier = k.members();
  GASpace ga(FinUniverse(sub.labels()), sub.leq_matrix());
  auto family = detail::family_for(sub, sub.elements(), mode, g);
  r.space = detail::expect_valid("algebraic_cf_space",
                                 [&] { return validate_cf_space(std::move(ga), std::move(family)); });
  if (!is_topological(r.space))
    throw TheoremViolation("NotTopological", "order on K(L) is not a preorder");
  r.domain = domain_of(r.space, g);

  std::vector<Subset> expected;
  for (std::size_t x = 0; x < l.size(); ++x) {
    Subset lower_compacts;
    for (std::size_t c = 0; c < r.carrier.size(); ++c)
      if (l.leq(r.carrier[c], x)) lower_compacts.insert(c);
    expected.push_back(lower_compacts);
    auto i = r.domain.family.index_of(lower_compacts);
    if (!i)
      throw TheoremViolation("AlgebraicClosedSetsMismatch", "↓x ∩ K(L) is not closed",
                             {{"x", l.label(x)}});
    r.iso.push_back(*i);
  }
  if (canonical_family(expected) != r.domain.family.sets)
    throw TheoremViolation("AlgebraicClosedSetsMismatch", "closed sets differ from {↓x ∩ K(L)}");
  if (!is_order_isomorphism(l, r.domain.order(), r.iso))
    throw TheoremViolation("IsoCheckFailed", "x ↦ ↓x ∩ K(L) is not an order isomorphism");
  return r;
}

// ---------------------------------------------------------------------------
// Abstract bases and round ideals

/// One z whose predecessors cannot all be interpolated. `predecessors` is the
/// full set {t | t ≺ z}, which fails whenever any F ≺ z fails; `smallest` is
/// the least failing F by size and then mask.
struct InterpolationFailure {
  std::size_t z = 0;
  Subset predecessors;
  Subset smallest;
};

/// Every z violating strong interpolation, in increasing order of z. F ranges
/// over all finite subsets of the predecessors of z, the empty set included.
inline std::vector<InterpolationFailure> interpolation_failures(const GASpace& b,
                                                                Engine engine = Engine::reduced,
                                                                const Guards& g = {}) {
  std::vector<InterpolationFailure> out;
  for (std::size_t z = 0; z < b.size(); ++z) {
    const Subset below = b.predecessors(z);
    auto interpolates = [&](Subset f) {
      bool found = false;
      below.for_each([&](std::size_t y) {
        if (!found && f.subset_of(b.predecessors(y))) found = true;
      });
      return found;
    };
    if (engine == Engine::reduced) {
      if (interpolates(below)) continue;
      InterpolationFailure fail{z, below, below};
      if (below.size() <= g.subset_iteration)
        detail::any_subset_smallest_first(below, [&](Subset f) {
          if (interpolates(f)) return false;
          fail.smallest = f;
          return true;
        });
      out.push_back(fail);
      continue;
    }
    enforce_guard("interpolation oracle", below.size(), g.subset_iteration);
    std::optional<Subset> smallest;
    detail::any_subset_smallest_first(below, [&](Subset f) {
      if (interpolates(f)) return false;
      smallest = f;
      return true;
    });
    if (smallest) out.push_back({z, below, *smallest});
  }
  return out;
}

/// Raised by validate_abstract_basis when interpolation fails; carries every
/// failing z.
class InterpolationError : public ValidationError {
 public:
  InterpolationError(const GASpace& b, std::vector<InterpolationFailure> failures)
      : ValidationError("InterpolationFailed", describe(b, failures), witness_of(b, failures)),
        failures_(std::move(failures)) {}

  const std::vector<InterpolationFailure>& failures() const { return failures_; }

 private:
  static std::string describe(const GASpace& b, const std::vector<InterpolationFailure>& fs) {
    std::string out = "strong interpolation fails:";
    for (const auto& f : fs)
      out += " (F=" + b.universe().format(f.predecessors) + ", z=" + b.universe().name(f.z) + ")";
    return out;
  }
  static Witness witness_of(const GASpace& b, const std::vector<InterpolationFailure>& fs) {
    Witness w;
    for (const auto& f : fs) {
      w.emplace_back("z", b.universe().name(f.z));
      w.emplace_back("F", b.universe().format(f.predecessors));
      w.emplace_back("smallest_F", b.universe().format(f.smallest));
    }
    return w;
  }

  std::vector<InterpolationFailure> failures_;
};

/// A set with a transitive relation ≺ satisfying strong interpolation.
class AbstractBasis {
 public:
  AbstractBasis() = default;
  const GASpace& relation() const { return rel_; }
  const FinUniverse& carrier() const { return rel_.universe(); }
  std::size_t size() const { return rel_.size(); }
  bool precedes(std::size_t x, std::size_t y) const { return rel_.related(x, y); }

 private:
  friend AbstractBasis validate_abstract_basis(GASpace, Engine, const Guards&);
  GASpace rel_;
};

inline AbstractBasis validate_abstract_basis(GASpace rel, Engine engine = Engine::reduced,
                                             const Guards& g = {}) {
  if (auto t = transitivity_violation(rel)) {
    const auto& u = rel.universe();
    throw ValidationError("NotTransitive", "relation is not transitive",
                          {{"x", u.name((*t)[0])}, {"y", u.name((*t)[1])}, {"z", u.name((*t)[2])}});
  }
  auto failures = interpolation_failures(rel, engine, g);
  if (!failures.empty()) throw InterpolationError(rel, std::move(failures));
  AbstractBasis b;
  b.rel_ = std::move(rel);
  return b;
}

inline AbstractBasis validate_abstract_basis(FinUniverse carrier, const BoolMatrix& prec,
                                             Engine engine = Engine::reduced, const Guards& g = {}) {
  return validate_abstract_basis(GASpace(std::move(carrier), prec), engine, g);
}

struct RoundIdealFamily {
  std::vector<Subset> ideals;
  std::shared_ptr<const FinPoset> order;
};

/// Nonempty I, closed downward under ≺, with any two members below a third.
inline bool is_round_ideal(const GASpace& b, Subset i) {
  if (i.empty()) return false;
  bool ok = true;
  i.for_each([&](std::size_t y) {
    if (!b.predecessors(y).subset_of(i)) ok = false;
  });
  if (!ok) return false;
  i.for_each([&](std::size_t x) {
    i.for_each([&](std::size_t y) {
      if (ok && !(b.successors(x) & b.successors(y)).intersects(i)) ok = false;
    });
  });
  return ok;
}

/// Round ideals of any transitive relation, found by filtering all nonempty
/// subsets, ordered by inclusion.
inline RoundIdealFamily round_ideals(const GASpace& b, const Guards& g = {}) {
  enforce_guard("round_ideals", b.size(), g.topology);
  std::vector<Subset> ideals;
  for_each_subset(b.all(), [&](Subset i) {
    if (is_round_ideal(b, i)) ideals.push_back(i);
  });
  auto fam = make_cf_family(b.universe(), std::move(ideals));
  return RoundIdealFamily{std::move(fam.sets), std::move(fam.order)};
}

inline RoundIdealFamily round_ideals(const AbstractBasis& b, const Guards& g = {}) {
  return round_ideals(b.relation(), g);
}

/// The singleton family over ≺ has exactly the round ideals as closed sets.
/// Closed sets are found by definition; when ≺ interpolates, the singleton
/// space must also pass CF validation.
inline bool cf_equals_round_ideals(const GASpace& b, const Guards& g = {}) {
  std::vector<Subset> singletons;
  for (std::size_t x = 0; x < b.size(); ++x) singletons.push_back(Subset::singleton(x));
  if (interpolation_failures(b).empty() && !transitivity_violation(b))
    detail::expect_valid("singleton family", [&] { return validate_cf_space(b, singletons); });
  return closed_sets_by_definition(b, singletons, g) == round_ideals(b, g).ideals;
}

/// (P, <<) as an abstract basis.
inline AbstractBasis way_below_basis(const FinPoset& p) {
  return detail::expect_valid("way_below_basis", [&] {
    return validate_abstract_basis(GASpace(FinUniverse(p.labels()), way_below_relation(p)));
  });
}

// ---------------------------------------------------------------------------
// Special domains

/// Lattice properties of ({R̄(F)}, ⊆) against those of the closed-set
/// domain, plus the algebraic and arithmetic-semilattice rows for
/// topological spaces.
inline TransferReport special_domain_transfer(const CFSpace& s, const Guards& g = {}) {
  const auto basis = basis_sets(s);
  const FinPoset base_order =
      FinPoset::by_inclusion(basis, [&](std::size_t i) { return s.format(basis[i]); });
  const auto base = classify(base_order, Engine::reduced, g);
  const CFDomain d = domain_of(s, g);
  const auto whole = classify(d.order(), Engine::reduced, g);
  TransferReport report{detail::lattice_transfer_rows(base, whole)};
  const bool topological = is_topological(s);
  report.rows.push_back({"topological", "algebraic domain", topological, whole.is_algebraic_domain()});
  report.rows.push_back({"topological with semilattice basis", "arithmetic semilattice",
                         topological && base.is_semilattice, whole.is_arithmetic_semilattice});
  return report;
}

}  // namespace cfkit
