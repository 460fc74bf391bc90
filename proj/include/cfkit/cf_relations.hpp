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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cfkit/cf_space.hpp"
#include "cfkit/error.hpp"
#include "cfkit/guard.hpp"
#include "cfkit/poset.hpp"
#include "cfkit/representation.hpp"
#include "cfkit/subset.hpp"

namespace cfkit {

using SpacePtr = std::shared_ptr<const CFSpace>;

inline SpacePtr share(CFSpace s) { return std::make_shared<const CFSpace>(std::move(s)); }

/// First violated axiom of a candidate relation, with its witness tuple.
struct AxiomViolation {
  int axiom = 0;
  Witness witness;
};

namespace detail {

/// below[a][b] iff member a ⊆ R̄(member b).
inline std::vector<Subset> below_table(const CFSpace& s) {
  std::vector<Subset> below(s.family_size());
  for (std::size_t a = 0; a < s.family_size(); ++a)
    for (std::size_t b = 0; b < s.family_size(); ++b)
      if (s.member(a).subset_of(s.upper(b))) below[a].insert(b);
  return below;
}

/// Rows of a relation: rows[F] is the set of G indices with FΘG.
inline std::vector<Subset> rows_of(const BoolMatrix& m) {
  std::vector<Subset> rows(m.rows());
  for (std::size_t f = 0; f < m.rows(); ++f)
    for (std::size_t g = 0; g < m.cols(); ++g)
      if (m(f, g)) rows[f].insert(g);
  return rows;
}

inline BoolMatrix matrix_of(const std::vector<Subset>& rows, std::size_t cols) {
  BoolMatrix m(rows.size(), cols);
  for (std::size_t f = 0; f < rows.size(); ++f) rows[f].for_each([&](std::size_t g) { m.set(f, g); });
  return m;
}

}  // namespace detail

/// Checks axioms (1) to (5) in order by exhaustive quantification over the
/// two families. Witnesses for (4) are searched in canonical family order.
inline std::optional<AxiomViolation> approx_rel_violation(const CFSpace& src, const CFSpace& tgt,
                                                          const BoolMatrix& rel) {
  const std::size_t n1 = src.family_size();
  const std::size_t n2 = tgt.family_size();
  const auto b1 = detail::below_table(src);  // b1[F] = {F' | F ⊆ R̄₁(F')}
  const auto b2 = detail::below_table(tgt);
  const auto rows = detail::rows_of(rel);
  auto f_name = [&](std::size_t f) { return src.format(src.member(f)); };
  auto g_name = [&](std::size_t g) { return tgt.format(tgt.member(g)); };

  for (std::size_t f = 0; f < n1; ++f)
    if (rows[f].empty()) return AxiomViolation{1, {{"F", f_name(f)}}};

  for (std::size_t f = 0; f < n1; ++f)
    for (std::size_t f2 = 0; f2 < n1; ++f2) {
      if (!b1[f].contains(f2)) continue;
      const Subset missing = rows[f] - rows[f2];
      if (!missing.empty())
        return AxiomViolation{2, {{"F", f_name(f)}, {"F'", f_name(f2)}, {"G", g_name(missing.first())}}};
    }

  for (std::size_t f = 0; f < n1; ++f)
    for (std::size_t g = 0; g < n2; ++g) {
      if (!rows[f].contains(g)) continue;
      for (std::size_t g2 = 0; g2 < n2; ++g2)
        if (b2[g2].contains(g) && !rows[f].contains(g2))
          return AxiomViolation{3, {{"F", f_name(f)}, {"G", g_name(g)}, {"G'", g_name(g2)}}};
    }

  for (std::size_t f = 0; f < n1; ++f)
    for (std::size_t g = 0; g < n2; ++g) {
      if (!rows[f].contains(g)) continue;
      bool found = false;
      for (std::size_t f2 = 0; f2 < n1 && !found; ++f2) {
        if (!b1[f2].contains(f)) continue;
        for (std::size_t g2 = 0; g2 < n2 && !found; ++g2)
          if (b2[g].contains(g2) && rows[f2].contains(g2)) found = true;
      }
      if (!found) return AxiomViolation{4, {{"F", f_name(f)}, {"G", g_name(g)}}};
    }

  for (std::size_t f = 0; f < n1; ++f)
    for (std::size_t g1 = 0; g1 < n2; ++g1) {
      if (!rows[f].contains(g1)) continue;
      for (std::size_t g2 = g1; g2 < n2; ++g2) {
        if (!rows[f].contains(g2)) continue;
        const Subset both = tgt.member(g1) | tgt.member(g2);
        bool found = false;
        rows[f].for_each([&](std::size_t g3) {
          if (!found && both.subset_of(tgt.upper(g3))) found = true;
        });
        if (!found)
          return AxiomViolation{5, {{"F", f_name(f)}, {"G1", g_name(g1)}, {"G2", g_name(g2)}}};
      }
    }
  return std::nullopt;
}

/// A CF-approximable relation Θ between the families of two spaces; (i, j)
/// indexes the canonical family order of source and target.
class ApproxRel {
 public:
  ApproxRel() = default;

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  bool related(std::size_t f, std::size_t g) const { return rows_.at(f).contains(g); }
  /// Indices of the G with FΘG.
  Subset row(std::size_t f) const { return rows_.at(f); }
  const std::vector<Subset>& rows() const { return rows_; }
  BoolMatrix matrix() const { return detail::matrix_of(rows_, target_->family_size()); }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t f = 0; f < rows_.size(); ++f)
      rows_[f].for_each([&](std::size_t g) { out.emplace_back(f, g); });
    return out;
  }

  /// Pair-set equality between the same pair of spaces.
  friend bool operator==(const ApproxRel& a, const ApproxRel& b) {
    auto same = [](const SpacePtr& x, const SpacePtr& y) { return x == y || *x == *y; };
    return same(a.source_, b.source_) && same(a.target_, b.target_) && a.rows_ == b.rows_;
  }

 private:
  friend ApproxRel validate_approx_rel(SpacePtr, SpacePtr, const BoolMatrix&);
  SpacePtr source_;
  SpacePtr target_;
  std::vector<Subset> rows_;
};

inline ApproxRel validate_approx_rel(SpacePtr src, SpacePtr tgt, const BoolMatrix& rel) {
  if (rel.rows() != src->family_size() || rel.cols() != tgt->family_size())
    throw InputError("DimensionMismatch", "relation matrix does not match the two families",
                     {{"rows", std::to_string(rel.rows())}, {"cols", std::to_string(rel.cols())}});
  if (auto v = approx_rel_violation(*src, *tgt, rel)) {
    std::string msg = "axiom (" + std::to_string(v->axiom) + ") fails:";
    for (const auto& [k, val] : v->witness) msg += " " + k + "=" + val;
    Witness w{{"axiom", std::to_string(v->axiom)}};
    w.insert(w.end(), v->witness.begin(), v->witness.end());
    throw ValidationError("AxiomViolated", msg, std::move(w));
  }
  ApproxRel r;
  r.rows_ = detail::rows_of(rel);
  r.source_ = std::move(src);
  r.target_ = std::move(tgt);
  return r;
}

/// Index pairs, each checked against the family sizes.
inline ApproxRel validate_approx_rel(SpacePtr src, SpacePtr tgt,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  BoolMatrix m(src->family_size(), tgt->family_size());
  for (auto [f, g] : pairs) {
    if (f >= m.rows() || g >= m.cols())
      throw InputError("IndexOutOfRange", "relation pair refers to a missing family member",
                       {{"F", std::to_string(f)}, {"G", std::to_string(g)}});
    m.set(f, g);
  }
  return validate_approx_rel(std::move(src), std::move(tgt), m);
}

namespace detail {

inline ApproxRel expect_valid_rel(const char* what, SpacePtr src, SpacePtr tgt, const BoolMatrix& m) {
  try {
    return validate_approx_rel(std::move(src), std::move(tgt), m);
  } catch (const ValidationError& e) {
    throw TheoremViolation("RelationInvalid", std::string(what) + " is not approximable: " + e.what(),
                           e.witness());
  }
}

}  // namespace detail

/// Θ̃(F): union of R̄₂(G) over FΘG. Checks that the union is closed and that
/// the sets being joined form a directed family.
inline Subset theta_tilde(const ApproxRel& theta, std::size_t f) {
  const CFSpace& src = *theta.source();
  const CFSpace& tgt = *theta.target();
  if (f >= src.family_size())
    throw InputError("UnknownFamilyMember", "no family member with index " + std::to_string(f),
                     {{"F", std::to_string(f)}});
  std::vector<Subset> parts;
  theta.row(f).for_each([&](std::size_t g) { parts.push_back(tgt.upper(g)); });
  const Subset out = detail::union_of(parts);
  if (!detail::is_directed_family(parts) || !is_cf_closed(tgt, out))
    throw TheoremViolation("TildeNotClosed", "Θ̃(F) is not a directed union of closed sets",
                           {{"F", src.format(src.member(f))}, {"union", tgt.format(out)}});
  return out;
}

/// The four equivalent descriptions of FΘG, evaluated separately.
inline std::array<bool, 4> relation_forms(const ApproxRel& theta, std::size_t f, std::size_t g) {
  const CFSpace& src = *theta.source();
  const CFSpace& tgt = *theta.target();
  bool via_f = false, via_g = false, via_both = false;
  for (std::size_t f2 = 0; f2 < src.family_size(); ++f2)
    if (src.member(f2).subset_of(src.upper(f)) && theta.related(f2, g)) via_f = true;
  for (std::size_t g2 = 0; g2 < tgt.family_size(); ++g2)
    if (theta.related(f, g2) && tgt.member(g).subset_of(tgt.upper(g2))) via_g = true;
  for (std::size_t f2 = 0; f2 < src.family_size(); ++f2)
    for (std::size_t g2 = 0; g2 < tgt.family_size(); ++g2)
      if (src.member(f2).subset_of(src.upper(f)) && tgt.member(g).subset_of(tgt.upper(g2)) &&
          theta.related(f2, g2))
        via_both = true;
  return {theta.related(f, g), via_f, via_g, via_both};
}

/// f_Θ(E) = ⋃{Θ̃(F) | F ⊆ E}, as a map between the closed-set domains.
inline MonoMap f_theta(const ApproxRel& theta, const CFDomain& d1, const CFDomain& d2) {
  const CFSpace& src = *theta.source();
  std::vector<Subset> tilde(src.family_size());
  for (std::size_t f = 0; f < src.family_size(); ++f) tilde[f] = theta_tilde(theta, f);
  std::vector<std::size_t> table;
  for (Subset e : d1.family.sets) {
    Subset image;
    for (std::size_t f = 0; f < src.family_size(); ++f)
      if (src.member(f).subset_of(e)) image |= tilde[f];
    auto j = d2.family.index_of(image);
    if (!j)
      throw TheoremViolation("ImageNotClosed", "f_Θ(E) is not a closed set",
                             {{"E", src.format(e)}, {"image", theta.target()->format(image)}});
    table.push_back(*j);
  }
  try {
    return MonoMap::make(d1.family.order, d2.family.order, std::move(table));
  } catch (const ValidationError& e) {
    throw TheoremViolation("MapNotMonotone", std::string("f_Θ is not monotone: ") + e.what(),
                           e.witness());
  }
}

inline MonoMap f_theta(const ApproxRel& theta, const Guards& g = {}) {
  return f_theta(theta, domain_of(*theta.source(), g), domain_of(*theta.target(), g));
}

/// Θ_f: FΘ_fG iff G ⊆ f(R̄₁(F)). `f` must act on the closed-set domains of
/// the two spaces (compared by value).
inline ApproxRel theta_from_map(SpacePtr src, SpacePtr tgt, const MonoMap& f, const CFDomain& d1,
                                const CFDomain& d2) {
  if (!(*f.source == d1.order()) || !(*f.target == d2.order()))
    throw InputError("SpaceMismatch", "map does not act on the closed-set domains of the spaces");
  if (!is_monotone(*f.source, *f.target, f.table))
    throw ValidationError("MapNotMonotone", "map is not monotone");
  BoolMatrix m(src->family_size(), tgt->family_size());
  for (std::size_t fi = 0; fi < src->family_size(); ++fi) {
    const Subset image = d2.family.sets[f(*d1.family.index_of(src->upper(fi)))];
    for (std::size_t gi = 0; gi < tgt->family_size(); ++gi)
      if (tgt->member(gi).subset_of(image)) m.set(fi, gi);
  }
  return detail::expect_valid_rel("Θ_f", std::move(src), std::move(tgt), m);
}

inline ApproxRel theta_from_map(SpacePtr src, SpacePtr tgt, const MonoMap& f, const Guards& g = {}) {
  const CFDomain d1 = domain_of(*src, g);
  const CFDomain d2 = domain_of(*tgt, g);
  return theta_from_map(std::move(src), std::move(tgt), f, d1, d2);
}

/// Θ_{f_Θ} == Θ as pair sets.
inline bool roundtrip_theta(const ApproxRel& theta, const Guards& g = {}) {
  const CFDomain d1 = domain_of(*theta.source(), g);
  const CFDomain d2 = domain_of(*theta.target(), g);
  return theta_from_map(theta.source(), theta.target(), f_theta(theta, d1, d2), d1, d2) == theta;
}

/// f_{Θ_f} == f pointwise.
inline bool roundtrip_map(SpacePtr src, SpacePtr tgt, const MonoMap& f, const Guards& g = {}) {
  const CFDomain d1 = domain_of(*src, g);
  const CFDomain d2 = domain_of(*tgt, g);
  return f_theta(theta_from_map(src, tgt, f, d1, d2), d1, d2).table == f.table;
}

/// (F, G) ∈ Id iff G ⊆ R̄(F).
inline ApproxRel identity_rel(SpacePtr s) {
  BoolMatrix m(s->family_size(), s->family_size());
  for (std::size_t f = 0; f < s->family_size(); ++f)
    for (std::size_t g = 0; g < s->family_size(); ++g)
      if (s->member(g).subset_of(s->upper(f))) m.set(f, g);
  return detail::expect_valid_rel("identity", s, s, m);
}

/// Υ ∘ Θ: (F₁, F₃) related iff some F₂ has F₁ΘF₂ and F₂ΥF₃.
inline ApproxRel compose_rel(const ApproxRel& upsilon, const ApproxRel& theta) {
  if (theta.target() != upsilon.source() && !(*theta.target() == *upsilon.source()))
    throw InputError("SpaceMismatch", "target of the first relation is not the source of the second");
  BoolMatrix m(theta.source()->family_size(), upsilon.target()->family_size());
  for (std::size_t f = 0; f < m.rows(); ++f) {
    Subset reach;
    theta.row(f).for_each([&](std::size_t mid) { reach |= upsilon.row(mid); });
    reach.for_each([&](std::size_t h) { m.set(f, h); });
  }
  return detail::expect_valid_rel("composition", theta.source(), upsilon.target(), m);
}

// ---------------------------------------------------------------------------
// Equivalence evidence

/// Every valid relation between two spaces, by exhaustive search.
///
/// Rows are chosen per F from the subsets of the target family that satisfy
/// (1), (3) and (5) on their own; rows of comparable F are kept nested, as
/// (2) requires. Each completed assignment is then run through the full
/// validator.
inline std::vector<BoolMatrix> enumerate_approx_rels(const CFSpace& src, const CFSpace& tgt,
                                                     const Guards& g = {}) {
  enforce_guard("relation enumeration (source family)", src.family_size(), g.relation_family);
  enforce_guard("relation enumeration (target family)", tgt.family_size(), g.relation_family);
  const std::size_t n1 = src.family_size();
  const std::size_t n2 = tgt.family_size();
  const auto b1 = detail::below_table(src);
  const auto b2 = detail::below_table(tgt);

  std::vector<Subset> candidates;
  for_each_subset(Subset::full(n2), [&](Subset row) {
    if (row.empty()) return;
    bool ok = true;
    row.for_each([&](std::size_t gi) {
      for (std::size_t g2 = 0; g2 < n2; ++g2)
        if (b2[g2].contains(gi) && !row.contains(g2)) ok = false;
    });
    row.for_each([&](std::size_t g1) {
      row.for_each([&](std::size_t g2) {
        if (!ok) return;
        const Subset both = tgt.member(g1) | tgt.member(g2);
        bool found = false;
        row.for_each([&](std::size_t g3) {
          if (both.subset_of(tgt.upper(g3))) found = true;
        });
        if (!found) ok = false;
      });
    });
    if (ok) candidates.push_back(row);
  });

  std::vector<BoolMatrix> out;
  std::vector<Subset> rows(n1);
  std::function<void(std::size_t)> assign = [&](std::size_t f) {
    if (f == n1) {
      const BoolMatrix m = detail::matrix_of(rows, n2);
      if (!approx_rel_violation(src, tgt, m)) out.push_back(m);
      return;
    }
    for (Subset row : candidates) {
      bool ok = true;
      for (std::size_t prev = 0; prev < f && ok; ++prev) {
        if (b1[prev].contains(f) && !rows[prev].subset_of(row)) ok = false;
        if (b1[f].contains(prev) && !row.subset_of(rows[prev])) ok = false;
      }
      if (!ok) continue;
      rows[f] = row;
      assign(f + 1);
    }
  };
  assign(0);
  return out;
}

struct EquivalenceReport {
  std::size_t relation_count = 0;
  std::size_t map_count = 0;
  bool faithful = false;  // Θ ↦ f_Θ injective
  bool full = false;      // every monotone map is some f_Θ
  bool generator_agrees = false;  // {Θ_f} equals the exhaustively found relations
  std::vector<BoolMatrix> relations;
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> relation_to_map;  // index into maps of f_Θ
  std::optional<CFSpace> source_witness;     // represents the source domain
  std::optional<CFSpace> target_witness;

  bool certified() const {
    return faithful && full && generator_agrees && relation_count == map_count &&
           source_witness.has_value() && target_witness.has_value();
  }
};

/// Exhaustive evidence that Θ ↦ f_Θ is a bijection for one pair of spaces,
/// with a represented CF-space for each domain.
inline EquivalenceReport equivalence_report(SpacePtr s1, SpacePtr s2, const Guards& g = {}) {
  const CFDomain d1 = domain_of(*s1, g);
  const CFDomain d2 = domain_of(*s2, g);
  enforce_guard("equivalence report (source domain)", d1.family.size(), g.relation_domain);
  enforce_guard("equivalence report (target domain)", d2.family.size(), g.relation_domain);

  EquivalenceReport r;
  r.maps = enumerate_monotone_tables(d1.order(), d2.order(), g);
  r.relations = enumerate_approx_rels(*s1, *s2, g);
  r.map_count = r.maps.size();
  r.relation_count = r.relations.size();

  std::map<std::vector<std::size_t>, std::size_t> map_index;
  for (std::size_t i = 0; i < r.maps.size(); ++i) map_index.emplace(r.maps[i], i);
  std::set<std::size_t> hit;
  bool all_found = true;
  for (const auto& m : r.relations) {
    const ApproxRel theta = validate_approx_rel(s1, s2, m);
    const MonoMap f = f_theta(theta, d1, d2);
    auto it = map_index.find(f.table);
    if (it == map_index.end()) {
      all_found = false;
      r.relation_to_map.push_back(r.maps.size());
      continue;
    }
    r.relation_to_map.push_back(it->second);
    hit.insert(it->second);
  }
  r.faithful = all_found && hit.size() == r.relations.size();
  r.full = all_found && hit.size() == r.maps.size();

  std::set<std::vector<Subset>> exhaustive, generated;
  for (const auto& m : r.relations) exhaustive.insert(detail::rows_of(m));
  for (const auto& table : r.maps) {
    const MonoMap f = MonoMap::make(d1.family.order, d2.family.order, table);
    generated.insert(theta_from_map(s1, s2, f, d1, d2).rows());
  }
  r.generator_agrees = exhaustive == generated;

  r.source_witness = representation_roundtrip(d1.order(), g).space;
  r.target_witness = representation_roundtrip(d2.order(), g).space;
  return r;
}

}  // namespace cfkit
