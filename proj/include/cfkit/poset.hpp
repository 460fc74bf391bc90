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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfkit/error.hpp"
#include "cfkit/guard.hpp"
#include "cfkit/subset.hpp"

namespace cfkit {

/// Explicit finite partial order on at most 64 labelled elements.
///
/// Construction validates reflexivity, antisymmetry and transitivity. Every
/// element keeps its principal ideal and principal filter as bitmasks, so
/// bounds of a subset are single AND-reductions.
class FinPoset {
 public:
  FinPoset() = default;

  /// Validates `leq` and reports the first violated axiom.
  static FinPoset validate(std::vector<std::string> labels, const BoolMatrix& leq) {
    FinUniverse names(labels);  // rejects duplicates and oversize carriers
    const std::size_t n = labels.size();
    if (leq.rows() != n || leq.cols() != n)
      throw InputError("DimensionMismatch",
                       "order matrix is " + std::to_string(leq.rows()) + "x" +
                           std::to_string(leq.cols()) + " for " + std::to_string(n) + " elements",
                       {{"rows", std::to_string(leq.rows())}, {"cols", std::to_string(leq.cols())}});
    for (std::size_t x = 0; x < n; ++x)
      if (!leq(x, x))
        throw ValidationError("NotReflexive", "element " + labels[x] + " is not below itself",
                              {{"x", labels[x]}});
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (leq(x, y) && leq(y, x))
          throw ValidationError("NotAntisymmetric",
                                labels[x] + " and " + labels[y] + " are mutually below each other",
                                {{"x", labels[x]}, {"y", labels[y]}});
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!leq(x, y)) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (leq(y, z) && !leq(x, z))
            throw ValidationError("NotTransitive",
                                  labels[x] + "<=" + labels[y] + "<=" + labels[z] + " but not " +
                                      labels[x] + "<=" + labels[z],
                                  {{"x", labels[x]}, {"y", labels[y]}, {"z", labels[z]}});
      }
    FinPoset p;
    p.labels_ = std::move(labels);
    p.up_.assign(n, Subset{});
    p.down_.assign(n, Subset{});
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (leq(x, y)) {
          p.up_[x].insert(y);
          p.down_[y].insert(x);
        }
    return p;
  }

  /// Builds the matrix from a predicate and validates it.
  static FinPoset from_predicate(std::vector<std::string> labels,
                                 const std::function<bool(std::size_t, std::size_t)>& leq) {
    BoolMatrix m(labels.size(), labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x)
      for (std::size_t y = 0; y < labels.size(); ++y) m.set(x, y, leq(x, y));
    return validate(std::move(labels), m);
  }

  /// Family of sets ordered by inclusion, labelled by `label(i)`.
  static FinPoset by_inclusion(const std::vector<Subset>& sets,
                               const std::function<std::string(std::size_t)>& label) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sets.size(); ++i) labels.push_back(label(i));
    return from_predicate(std::move(labels),
                          [&](std::size_t a, std::size_t b) { return sets[a].subset_of(sets[b]); });
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  Subset elements() const { return Subset::full(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }

  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  Subset up(std::size_t x) const { return up_[x]; }
  Subset down(std::size_t x) const { return down_[x]; }

  Subset down_closure(Subset a) const {
    Subset out;
    a.for_each([&](std::size_t x) { out |= down_[x]; });
    return out;
  }

  /// Common upper bounds; for the empty set this is every element.
  Subset upper_bounds(Subset a) const {
    Subset out = elements();
    a.for_each([&](std::size_t x) { out &= up_[x]; });
    return out;
  }

  Subset lower_bounds(Subset a) const {
    Subset out = elements();
    a.for_each([&](std::size_t x) { out &= down_[x]; });
    return out;
  }

  /// Greatest element of `a`, if any.
  std::optional<std::size_t> maximum(Subset a) const {
    std::optional<std::size_t> found;
    a.for_each([&](std::size_t x) {
      if (!found && a.subset_of(down_[x])) found = x;
    });
    return found;
  }

  std::optional<std::size_t> minimum(Subset a) const {
    std::optional<std::size_t> found;
    a.for_each([&](std::size_t x) {
      if (!found && a.subset_of(up_[x])) found = x;
    });
    return found;
  }

  /// Least upper bound, or absent when the upper bounds have no least member.
  std::optional<std::size_t> sup(Subset a) const { return minimum(upper_bounds(a)); }
  std::optional<std::size_t> inf(Subset a) const { return maximum(lower_bounds(a)); }

  std::optional<std::size_t> bottom() const { return minimum(elements()); }
  std::optional<std::size_t> top() const { return maximum(elements()); }

  /// Nonempty, and every pair has an upper bound inside the set. The empty
  /// set is never directed.
  bool is_directed(Subset d) const {
    if (d.empty()) return false;
    bool ok = true;
    d.for_each([&](std::size_t a) {
      if (!ok) return;
      d.for_each([&](std::size_t b) {
        if (ok && !(up_[a] & up_[b]).intersects(d)) ok = false;
      });
    });
    return ok;
  }

  /// Induced suborder on `b`; element i of the result is the i-th member of b.
  FinPoset restrict(Subset b) const {
    const auto members = b.members();
    std::vector<std::string> labels;
    for (auto m : members) labels.push_back(labels_[m]);
    return from_predicate(std::move(labels), [&](std::size_t i, std::size_t j) {
      return leq(members[i], members[j]);
    });
  }

  BoolMatrix leq_matrix() const {
    BoolMatrix m(size(), size());
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y) m.set(x, y, leq(x, y));
    return m;
  }

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

/// Covering pairs (x, y): x < y with nothing strictly between.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinPoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      Subset between = (p.up(x) & p.down(y)) - Subset{x, y};
      if (between.empty()) edges.emplace_back(x, y);
    }
  return edges;
}

// ---------------------------------------------------------------------------
// Way-below

/// x << y, evaluated literally: every directed D whose supremum exists and
/// lies above y must contain an element above x. Exponential in |P|.
inline bool way_below(const FinPoset& p, std::size_t x, std::size_t y, const Guards& g = {}) {
  enforce_guard("way_below", p.size(), g.subset_iteration);
  return !any_subset(p.elements(), [&](Subset d) {
    if (!p.is_directed(d)) return false;
    auto s = p.sup(d);
    if (!s || !p.leq(y, *s)) return false;
    return !p.down_closure(d).contains(x);
  });
}

/// Production path for finite posets, where every directed set has a
/// greatest element and << coincides with <=.
inline bool way_below_shortcut(const FinPoset& p, std::size_t x, std::size_t y) {
  return p.leq(x, y);
}

/// Whole relation as a matrix. The oracle engine enumerates directed subsets
/// once and strikes out the pairs each one refutes.
inline BoolMatrix way_below_relation(const FinPoset& p, Engine engine = Engine::reduced,
                                     const Guards& g = {}) {
  const std::size_t n = p.size();
  BoolMatrix wb(n, n);
  if (engine == Engine::reduced) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) wb.set(x, y, way_below_shortcut(p, x, y));
    return wb;
  }
  enforce_guard("way_below_relation", n, g.subset_iteration);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) wb.set(x, y);
  for_each_subset(p.elements(), [&](Subset d) {
    if (!p.is_directed(d)) return;
    auto s = p.sup(d);
    if (!s) return;
    const Subset covered = p.down_closure(d);
    p.down(*s).for_each([&](std::size_t y) {
      for (std::size_t x = 0; x < n; ++x)
        if (!covered.contains(x)) wb.set(x, y, false);
    });
  });
  return wb;
}

/// The set of elements way-below y.
inline Subset way_below_set(const FinPoset& p, std::size_t y, Engine engine = Engine::reduced,
                            const Guards& g = {}) {
  Subset out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const bool wb = engine == Engine::reduced ? way_below_shortcut(p, x, y) : way_below(p, x, y, g);
    if (wb) out.insert(x);
  }
  return out;
}

/// Compact elements, K(P) = {x | x << x}.
inline Subset compacts(const FinPoset& p, Engine engine = Engine::reduced, const Guards& g = {}) {
  Subset out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const bool wb = engine == Engine::reduced ? way_below_shortcut(p, x, x) : way_below(p, x, x, g);
    if (wb) out.insert(x);
  }
  return out;
}

/// Whether every a in P is the supremum of a directed subset of B way-below a.
///
/// The oracle searches all subsets D of B ∩ ⇓a. The reduced engine uses the
/// standard equivalent test: B ∩ ⇓a itself is directed with supremum a.
inline bool is_basis(const FinPoset& p, Subset basis, Engine engine = Engine::reduced,
                     const Guards& g = {}) {
  if (!basis.fits(p.size()))
    throw InputError("UniverseMismatch", "basis has members outside the poset");
  for (std::size_t a = 0; a < p.size(); ++a) {
    const Subset candidates = basis & way_below_set(p, a, engine, g);
    bool ok = false;
    if (engine == Engine::reduced) {
      ok = p.is_directed(candidates) && p.sup(candidates) == a;
    } else {
      ok = any_subset(candidates, [&](Subset d) { return p.is_directed(d) && p.sup(d) == a; });
    }
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Classification

/// Lattice-class flags of a finite poset.
struct PosetClassReport {
  bool is_empty = false;
  bool has_bottom = false;
  bool has_top = false;
  bool is_semilattice = false;
  bool is_sup_semilattice = false;
  bool is_complete_lattice = false;
  bool is_cusl = false;
  bool is_bc_poset = false;
  bool is_dcpo = false;
  bool is_continuous = false;
  bool is_algebraic = false;
  bool is_arithmetic_semilattice = false;

  bool is_continuous_domain() const { return is_dcpo && is_continuous; }
  bool is_algebraic_domain() const { return is_dcpo && is_algebraic; }
  bool is_continuous_semilattice() const { return is_continuous_domain() && is_semilattice; }
  bool is_continuous_sup_semilattice() const { return is_continuous_domain() && is_sup_semilattice; }
  bool is_continuous_lattice() const { return is_continuous_domain() && is_complete_lattice; }
  bool is_bc_domain() const { return is_continuous_domain() && is_bc_poset; }

  /// complete lattice => bc-poset => cusl.
  void check_chain() const {
    if ((is_complete_lattice && !is_bc_poset) || (is_bc_poset && !is_cusl))
      throw TheoremViolation("ClassChainBroken",
                             "complete lattice => bc-poset => cusl failed on a report");
  }

  friend bool operator==(const PosetClassReport&, const PosetClassReport&) = default;
};

namespace detail {

inline bool subsemilattice_of_compacts(const FinPoset& p, Subset k) {
  bool ok = true;
  k.for_each([&](std::size_t x) {
    k.for_each([&](std::size_t y) {
      if (!ok) return;
      auto m = p.inf(Subset{x, y});
      if (!m || !k.contains(*m)) ok = false;
    });
  });
  return ok;
}

inline PosetClassReport classify_reduced(const FinPoset& p) {
  PosetClassReport r;
  const std::size_t n = p.size();
  r.is_empty = n == 0;
  r.has_bottom = p.bottom().has_value();
  r.has_top = p.top().has_value();
  r.is_semilattice = r.is_sup_semilattice = true;
  bool consistent_pairs_have_sups = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const Subset pair{x, y};
      if (!p.inf(pair)) r.is_semilattice = false;
      const bool has_sup = p.sup(pair).has_value();
      if (!has_sup) r.is_sup_semilattice = false;
      if (!p.upper_bounds(pair).empty() && !has_sup) consistent_pairs_have_sups = false;
    }
  // Finite sets: pairwise suprema plus a bottom give all suprema.
  r.is_complete_lattice = n > 0 && r.has_bottom && r.is_sup_semilattice;
  r.is_cusl = (n == 0 || r.has_bottom) && consistent_pairs_have_sups;
  r.is_bc_poset = r.is_cusl;
  // A finite directed set contains its own supremum.
  r.is_dcpo = true;
  r.is_continuous = is_basis(p, p.elements(), Engine::reduced);
  const Subset k = compacts(p, Engine::reduced);
  r.is_algebraic = is_basis(p, k, Engine::reduced);
  r.is_arithmetic_semilattice = r.is_algebraic_domain() && r.is_semilattice &&
                                subsemilattice_of_compacts(p, k);
  return r;
}

inline PosetClassReport classify_oracle(const FinPoset& p, const Guards& g) {
  enforce_guard("classify", p.size(), g.subset_iteration);
  PosetClassReport r;
  r.is_empty = p.empty();
  r.has_bottom = p.sup(Subset{}).has_value();
  r.has_top = p.inf(Subset{}).has_value();
  r.is_semilattice = r.is_sup_semilattice = r.is_complete_lattice = true;
  r.is_cusl = r.is_bc_poset = r.is_dcpo = true;
  for_each_subset(p.elements(), [&](Subset a) {
    const bool has_sup = p.sup(a).has_value();
    if (a.size() == 2) {
      if (!p.inf(a)) r.is_semilattice = false;
      if (!has_sup) r.is_sup_semilattice = false;
    }
    if (!has_sup) r.is_complete_lattice = false;
    const bool consistent = !p.upper_bounds(a).empty();
    if (consistent && !has_sup) r.is_cusl = r.is_bc_poset = false;
    if (p.is_directed(a) && !has_sup) r.is_dcpo = false;
  });
  r.is_continuous = is_basis(p, p.elements(), Engine::oracle, g);
  const Subset k = compacts(p, Engine::oracle, g);
  r.is_algebraic = is_basis(p, k, Engine::oracle, g);
  r.is_arithmetic_semilattice = r.is_algebraic_domain() && r.is_semilattice &&
                                subsemilattice_of_compacts(p, k);
  return r;
}

}  // namespace detail

/// Lattice-class report. The oracle engine decides each flag by brute force
/// over all subsets; the reduced engine uses pairwise characterisations that
/// are equivalent on finite posets.
inline PosetClassReport classify(const FinPoset& p, Engine engine = Engine::reduced,
                                 const Guards& g = {}) {
  PosetClassReport r =
      engine == Engine::reduced ? detail::classify_reduced(p) : detail::classify_oracle(p, g);
  r.check_chain();
  return r;
}

// ---------------------------------------------------------------------------
// Maps

inline bool is_monotone(const FinPoset& source, const FinPoset& target,
                        const std::vector<std::size_t>& table) {
  if (table.size() != source.size()) return false;
  for (auto t : table)
    if (t >= target.size()) return false;
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y)
      if (source.leq(x, y) && !target.leq(table[x], table[y])) return false;
  return true;
}

/// Order-preserving map between two posets, given by its value table.
struct MonoMap {
  std::shared_ptr<const FinPoset> source;
  std::shared_ptr<const FinPoset> target;
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t x) const { return table.at(x); }

  /// Validating constructor.
  static MonoMap make(std::shared_ptr<const FinPoset> source,
                      std::shared_ptr<const FinPoset> target, std::vector<std::size_t> table) {
    if (!is_monotone(*source, *target, table))
      throw ValidationError("MapNotMonotone", "table is not an order-preserving map");
    return MonoMap{std::move(source), std::move(target), std::move(table)};
  }

  static MonoMap identity(std::shared_ptr<const FinPoset> p) {
    std::vector<std::size_t> t(p->size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return MonoMap{p, p, std::move(t)};
  }

  Subset image(Subset a) const {
    Subset out;
    a.for_each([&](std::size_t x) { out.insert(table[x]); });
    return out;
  }
};

/// g ∘ f.
inline MonoMap compose(const MonoMap& g, const MonoMap& f) {
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return MonoMap{f.source, g.target, std::move(t)};
}

/// f(sup D) = sup f(D) for every directed D of the source, checked literally.
inline bool is_scott_continuous(const MonoMap& f, const Guards& g = {}) {
  const FinPoset& p = *f.source;
  const FinPoset& q = *f.target;
  enforce_guard("is_scott_continuous", p.size(), g.subset_iteration);
  return !any_subset(p.elements(), [&](Subset d) {
    if (!p.is_directed(d)) return false;
    auto s = p.sup(d);
    if (!s) return false;
    auto t = q.sup(f.image(d));
    return !t || *t != f(*s);
  });
}

/// Value tables of all monotone maps P -> Q, lexicographic in the table.
inline std::vector<std::vector<std::size_t>> enumerate_monotone_tables(const FinPoset& p,
                                                                       const FinPoset& q,
                                                                       const Guards& g = {}) {
  enforce_guard("enumerate_monotone_maps", std::max(p.size(), q.size()), g.map_enumeration);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> table(p.size());
  std::function<void(std::size_t)> assign = [&](std::size_t x) {
    if (x == p.size()) {
      out.push_back(table);
      return;
    }
    for (std::size_t y = 0; y < q.size(); ++y) {
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        if (p.leq(z, x) && !q.leq(table[z], y)) ok = false;
        if (p.leq(x, z) && !q.leq(y, table[z])) ok = false;
      }
      if (!ok) continue;
      table[x] = y;
      assign(x + 1);
    }
  };
  assign(0);
  return out;
}

inline std::vector<MonoMap> enumerate_monotone_maps(std::shared_ptr<const FinPoset> p,
                                                    std::shared_ptr<const FinPoset> q,
                                                    const Guards& g = {}) {
  std::vector<MonoMap> out;
  for (auto& t : enumerate_monotone_tables(*p, *q, g)) out.push_back(MonoMap{p, q, std::move(t)});
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

inline bool is_order_isomorphism(const FinPoset& p, const FinPoset& q,
                                 const std::vector<std::size_t>& h) {
  if (p.size() != q.size() || h.size() != p.size()) return false;
  Subset hit;
  for (auto y : h) {
    if (y >= q.size() || hit.contains(y)) return false;
    hit.insert(y);
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(h[x], h[y])) return false;
  return true;
}

/// A bijection h with x <= y iff h(x) <= h(y), or nothing. Candidates are
/// pruned by (|↓x|, |↑x|) signatures before backtracking.
inline std::optional<std::vector<std::size_t>> order_isomorphic(const FinPoset& p, const FinPoset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  auto signature = [](const FinPoset& s, std::size_t x) {
    return std::pair{s.down(x).size(), s.up(x).size()};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sp, sq;
  for (std::size_t x = 0; x < n; ++x) {
    sp.push_back(signature(p, x));
    sq.push_back(signature(q, x));
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> h(n);
  Subset used;
  std::function<bool(std::size_t)> extend = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used.contains(y) || sp[x] != sq[y]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z)
        ok = p.leq(z, x) == q.leq(h[z], y) && p.leq(x, z) == q.leq(y, h[z]);
      if (!ok) continue;
      h[x] = y;
      used.insert(y);
      if (extend(x + 1)) return true;
      used.erase(y);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return h;
}

// ---------------------------------------------------------------------------
// Transfer of lattice properties from a basis to the whole poset

enum class RowStatus { holds, failed, not_applicable };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::holds: return "holds";
    case RowStatus::failed: return "failed";
    case RowStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

/// One implication "hypothesis on the basis => conclusion on the domain".
struct TransferRow {
  std::string hypothesis;
  std::string conclusion;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;

  RowStatus status() const {
    if (!hypothesis_holds) return RowStatus::not_applicable;
    return conclusion_holds ? RowStatus::holds : RowStatus::failed;
  }
};

struct TransferReport {
  std::vector<TransferRow> rows;

  bool any_failed() const {
    for (const auto& r : rows)
      if (r.status() == RowStatus::failed) return true;
    return false;
  }
  const TransferRow* find(const std::string& hypothesis) const {
    for (const auto& r : rows)
      if (r.hypothesis == hypothesis) return &r;
    return nullptr;
  }
};

namespace detail {

/// The six rows shared by basis transfer and CF-space transfer.
inline std::vector<TransferRow> lattice_transfer_rows(const PosetClassReport& base,
                                                      const PosetClassReport& whole) {
  return {
      {"semilattice", "continuous semilattice", base.is_semilattice,
       whole.is_continuous_semilattice()},
      {"sup-semilattice", "continuous sup-semilattice", base.is_sup_semilattice,
       whole.is_continuous_sup_semilattice()},
      {"bottom", "continuous domain with bottom", base.has_bottom,
       whole.is_continuous_domain() && whole.has_bottom},
      {"top", "continuous domain with top", base.has_top,
       whole.is_continuous_domain() && whole.has_top},
      {"sup-semilattice with bottom", "continuous lattice",
       base.is_sup_semilattice && base.has_bottom, whole.is_continuous_lattice()},
      {"cusl", "bc-domain", base.is_cusl, whole.is_bc_domain()},
  };
}

}  // namespace detail

/// For a basis B of P, checks that each lattice property of (B, <=) carries
/// over to P. Rows whose hypothesis fails are reported as not applicable.
inline TransferReport base_transfer_check(const FinPoset& p, Subset basis, const Guards& g = {}) {
  if (!is_basis(p, basis))
    throw ValidationError("BasisInvalid", "subset is not a basis of the poset",
                          {{"basis", format_indices(basis)}});
  const auto base = classify(p.restrict(basis), Engine::reduced, g);
  const auto whole = classify(p, Engine::reduced, g);
  return TransferReport{detail::lattice_transfer_rows(base, whole)};
}

}  // namespace cfkit
