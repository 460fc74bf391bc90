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

#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

namespace cfkit {
namespace {

using testing::antichain;
using testing::chain;
using testing::to_oracle;

// --- Subset / FinUniverse / BoolMatrix -------------------------------------

TEST(Subset, BasicAlgebra) {
  Subset a{0, 2, 5};
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_FALSE(a.contains(200));
  EXPECT_EQ(a.first(), 0u);
  EXPECT_EQ(a.members(), (std::vector<std::size_t>{0, 2, 5}));
  EXPECT_EQ(a.complement(6), (Subset{1, 3, 4}));
  EXPECT_EQ((a | Subset{1}), (Subset{0, 1, 2, 5}));
  EXPECT_EQ((a & Subset{2, 3}), Subset{2});
  EXPECT_EQ((a - Subset{0}), (Subset{2, 5}));
  EXPECT_TRUE(Subset{}.subset_of(a));
  EXPECT_TRUE(a.fits(6));
  EXPECT_FALSE(a.fits(5));
  EXPECT_EQ(Subset::full(64).size(), 64u);
}

TEST(Subset, ForEachSubsetVisitsPowersetInOrder) {
  const Subset s{1, 3, 4};
  std::vector<Subset> seen;
  for_each_subset(s, [&](Subset x) { seen.push_back(x); });
  ASSERT_EQ(seen.size(), 8u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), Subset{});
  EXPECT_EQ(seen.back(), s);
  for (auto x : seen) EXPECT_TRUE(x.subset_of(s));
  EXPECT_EQ(std::set<Subset>(seen.begin(), seen.end()).size(), 8u);
}

TEST(Subset, AnySubsetStopsEarly) {
  int calls = 0;
  EXPECT_TRUE(any_subset(Subset::full(5), [&](Subset x) {
    ++calls;
    return x.size() == 2;
  }));
  EXPECT_LT(calls, 32);
}

TEST(Subset, CanonicalFamilySortsAndDeduplicates) {
  auto f = canonical_family({Subset{0, 1}, Subset{}, Subset{2}, Subset{0, 1}});
  EXPECT_EQ(f, (std::vector<Subset>{Subset{}, Subset{0, 1}, Subset{2}}));
}

TEST(FinUniverse, RejectsDuplicatesAndUnknowns) {
  try {
    FinUniverse({"a", "b", "a"});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), "DuplicateElement");
    EXPECT_EQ(e.witness_value("element"), "a");
  }
  FinUniverse u({"x", "y"});
  EXPECT_EQ(u.index_of("y"), 1u);
  EXPECT_THROW(u.index_of("z"), InputError);
  EXPECT_THROW(u.check_element(2), InputError);
  EXPECT_THROW(u.check_subset(Subset{2}), InputError);
  EXPECT_EQ(u.format(Subset{0, 1}), "{x,y}");
  EXPECT_EQ(u.format(Subset{}), "{}");
  std::vector<std::string> many(65);
  for (std::size_t i = 0; i < many.size(); ++i) many[i] = std::to_string(i);
  EXPECT_THROW(FinUniverse{many}, InputError);
}

// --- FinPoset validation ----------------------------------------------------

TEST(FinPoset, ReportsFirstViolatedAxiom) {
  BoolMatrix m(2, 2);
  m.set(0, 0);
  try {
    FinPoset::validate({"a", "b"}, m);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "NotReflexive");
    EXPECT_EQ(e.witness_value("x"), "b");
  }
  m.set(1, 1);
  m.set(0, 1);
  m.set(1, 0);
  try {
    FinPoset::validate({"a", "b"}, m);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "NotAntisymmetric");
  }
  BoolMatrix t(3, 3);
  for (int i = 0; i < 3; ++i) t.set(i, i);
  t.set(0, 1);
  t.set(1, 2);
  try {
    FinPoset::validate({"a", "b", "c"}, t);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "NotTransitive");
    EXPECT_EQ(e.witness_value("z"), "c");
  }
  EXPECT_THROW(FinPoset::validate({"a"}, BoolMatrix(2, 2)), InputError);
}

TEST(FinPoset, BoundsOnDiamond) {
  // bottom a, middle b c, top d
  auto p = FinPoset::from_predicate({"a", "b", "c", "d"}, [](std::size_t x, std::size_t y) {
    return x == y || x == 0 || y == 3;
  });
  EXPECT_EQ(p.sup(Subset{1, 2}), 3u);
  EXPECT_EQ(p.inf(Subset{1, 2}), 0u);
  EXPECT_EQ(p.bottom(), 0u);
  EXPECT_EQ(p.top(), 3u);
  EXPECT_EQ(p.sup(Subset{}), 0u);
  EXPECT_FALSE(p.is_directed(Subset{1, 2}));
  EXPECT_TRUE(p.is_directed(Subset{1, 2, 3}));
  EXPECT_FALSE(p.is_directed(Subset{}));
  EXPECT_EQ(hasse_edges(p).size(), 4u);
}

// --- catalog ----------------------------------------------------------------

TEST(Catalog, CountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(posets_of_size(n).size(), expected[n]) << n;
}

TEST(Catalog, RepresentativesArePairwiseNonIsomorphic) {
  auto reps = posets_of_size(4);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(order_isomorphic(reps[i], reps[j]));
  EXPECT_THROW(posets_of_size(7), InputError);
}

TEST(Isomorphism, RandomRelabellingIsIsomorphic) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 1 + rng.below(6);
    const FinPoset p = random_poset(n, rng);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    // q has p's order transported along perm: perm[x] <=_q perm[y] iff x <=_p y.
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    const FinPoset q = FinPoset::from_predicate(letter_labels(n), [&](std::size_t a, std::size_t b) {
      return p.leq(inv[a], inv[b]);
    });
    auto iso = order_isomorphic(p, q);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(is_order_isomorphism(p, q, *iso));
    EXPECT_TRUE(is_order_isomorphism(p, q, perm));
  }
}

TEST(Isomorphism, DistinguishesChainFromAntichain) {
  EXPECT_FALSE(order_isomorphic(chain(3), antichain(3)));
  EXPECT_FALSE(order_isomorphic(chain(3), chain(2)));
  EXPECT_TRUE(order_isomorphic(FinPoset{}, FinPoset{}));
}

// --- way-below --------------------------------------------------------------

TEST(WayBelow, LiteralDefinitionMatchesOracleOnCatalog) {
  for (const auto& p : poset_catalog(4)) {
    const auto o = to_oracle(p);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        EXPECT_EQ(way_below(p, x, y), oracle::way_below(o, static_cast<int>(x), static_cast<int>(y)));
  }
}

TEST(WayBelow, EnginesAgreeAndCoincideWithOrderOnRandomPosets) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const FinPoset p = random_poset(1 + rng.below(7), rng);
    const BoolMatrix reduced = way_below_relation(p, Engine::reduced);
    const BoolMatrix brute = way_below_relation(p, Engine::oracle);
    EXPECT_EQ(reduced, brute);
    const auto o = to_oracle(p);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        EXPECT_EQ(reduced(x, y), p.leq(x, y));
        EXPECT_EQ(brute(x, y), oracle::way_below(o, static_cast<int>(x), static_cast<int>(y)));
      }
    EXPECT_EQ(compacts(p), p.elements());
    EXPECT_EQ(compacts(p, Engine::oracle), p.elements());
  }
}

TEST(WayBelow, GuardTrips) {
  Guards g;
  g.subset_iteration = 3;
  EXPECT_THROW(way_below(chain(4), 0, 1, g), GuardError);
  try {
    way_below_relation(chain(4), Engine::oracle, g);
  } catch (const GuardError& e) {
    EXPECT_EQ(e.code(), "SizeGuardExceeded");
    EXPECT_EQ(e.witness_value("limit"), "3");
  }
}

// --- classification ---------------------------------------------------------

/// Flags decided directly from bounds computed by the oracle.
PosetClassReport oracle_flags(const FinPoset& p) {
  const auto o = to_oracle(p);
  const int n = static_cast<int>(p.size());
  PosetClassReport r;
  r.is_empty = n == 0;
  r.has_bottom = oracle::least_upper_bound(o, 0).has_value();
  r.has_top = oracle::greatest_lower_bound(o, 0).has_value();
  r.is_semilattice = r.is_sup_semilattice = r.is_complete_lattice = r.is_cusl = true;
  for (oracle::Mask a = 0; a <= oracle::full(n); ++a) {
    const auto s = oracle::least_upper_bound(o, a);
    if (std::popcount(a) == 2) {
      if (!oracle::greatest_lower_bound(o, a)) r.is_semilattice = false;
      if (!s) r.is_sup_semilattice = false;
    }
    if (!s) r.is_complete_lattice = false;
    bool bounded = false;
    for (int u = 0; u < n; ++u) {
      bool above = true;
      for (int x = 0; x < n; ++x)
        if (oracle::has(a, x) && !o[x][u]) above = false;
      if (above) bounded = true;
    }
    if (bounded && !s) r.is_cusl = false;
  }
  return r;
}

TEST(Classify, EnginesAgreeOnCatalogAndRandom) {
  std::vector<FinPoset> all = poset_catalog(5);
  Rng rng(3);
  for (int i = 0; i < 40; ++i) all.push_back(random_poset(6 + rng.below(2), rng));
  for (const auto& p : all) {
    const auto reduced = classify(p, Engine::reduced);
    const auto brute = classify(p, Engine::oracle);
    EXPECT_EQ(reduced, brute);
    const auto o = oracle_flags(p);
    EXPECT_EQ(reduced.has_bottom, o.has_bottom);
    EXPECT_EQ(reduced.has_top, o.has_top);
    EXPECT_EQ(reduced.is_semilattice, o.is_semilattice);
    EXPECT_EQ(reduced.is_sup_semilattice, o.is_sup_semilattice);
    EXPECT_EQ(reduced.is_complete_lattice, o.is_complete_lattice);
    EXPECT_EQ(reduced.is_cusl, o.is_cusl);
    // Every finite poset is an algebraic dcpo.
    EXPECT_TRUE(reduced.is_dcpo);
    EXPECT_TRUE(reduced.is_continuous);
    EXPECT_TRUE(reduced.is_algebraic);
  }
}

TEST(Classify, KnownShapes) {
  const auto c3 = classify(chain(3));
  EXPECT_TRUE(c3.is_continuous_lattice());
  EXPECT_TRUE(c3.is_arithmetic_semilattice);
  const auto a2 = classify(antichain(2));
  EXPECT_FALSE(a2.has_bottom);
  EXPECT_FALSE(a2.is_semilattice);
  EXPECT_FALSE(a2.is_cusl);  // the empty set is bounded but has no sup
  const auto e = classify(FinPoset{});
  EXPECT_TRUE(e.is_empty);
  EXPECT_FALSE(e.is_complete_lattice);
}

// --- monotone and Scott-continuous maps -----------------------------------

TEST(MonotoneMaps, SmallCounts) {
  EXPECT_EQ(enumerate_monotone_tables(chain(2), chain(2)).size(), 3u);
  EXPECT_EQ(enumerate_monotone_tables(antichain(2), chain(2)).size(), 4u);
  EXPECT_EQ(enumerate_monotone_tables(chain(2), antichain(2)).size(), 2u);
  EXPECT_EQ(enumerate_monotone_tables(FinPoset{}, chain(2)).size(), 1u);
  EXPECT_EQ(enumerate_monotone_tables(chain(1), FinPoset{}).size(), 0u);
}

TEST(MonotoneMaps, CountsMatchOracleOnCatalogPairs) {
  const auto cat = poset_catalog(3);
  for (const auto& p : cat)
    for (const auto& q : cat)
      EXPECT_EQ(enumerate_monotone_tables(p, q).size(), oracle::count_monotone(to_oracle(p), to_oracle(q)));
}

TEST(MonotoneMaps, ScottContinuousIffMonotone) {
  const auto cat = poset_catalog(3);
  for (const auto& p : cat)
    for (const auto& q : cat) {
      auto sp = std::make_shared<const FinPoset>(p);
      auto sq = std::make_shared<const FinPoset>(q);
      for (auto& m : enumerate_monotone_maps(sp, sq)) EXPECT_TRUE(is_scott_continuous(m));
    }
}

TEST(MonotoneMaps, MakeRejectsNonMonotoneTable) {
  auto c = std::make_shared<const FinPoset>(chain(2));
  EXPECT_THROW(MonoMap::make(c, c, {1, 0}), ValidationError);
  EXPECT_THROW(MonoMap::make(c, c, {0, 5}), ValidationError);
  auto id = MonoMap::identity(c);
  auto top = MonoMap::make(c, c, {1, 1});
  EXPECT_EQ(compose(top, id).table, top.table);
  EXPECT_EQ(compose(id, top).table, top.table);
  EXPECT_EQ(top.image(Subset{0, 1}), Subset{1});
}

// --- bases and transfer ---------------------------------------------------

TEST(Basis, WholePosetIsBasisAndSmallerSetsMayNotBe) {
  const auto c = chain(3);
  EXPECT_TRUE(is_basis(c, c.elements()));
  EXPECT_TRUE(is_basis(c, c.elements(), Engine::oracle));
  EXPECT_FALSE(is_basis(c, Subset{0, 2}));
  EXPECT_FALSE(is_basis(c, Subset{0, 2}, Engine::oracle));
  EXPECT_THROW(is_basis(c, Subset{5}), InputError);
}

TEST(Basis, EnginesAgreeOnAllSubsetsOfCatalog) {
  for (const auto& p : poset_catalog(4))
    for_each_subset(p.elements(), [&](Subset b) {
      EXPECT_EQ(is_basis(p, b, Engine::reduced), is_basis(p, b, Engine::oracle));
    });
}

TEST(Transfer, NoRowFailsOnCatalog) {
  for (const auto& p : poset_catalog(4)) {
    const auto report = base_transfer_check(p, p.elements());
    EXPECT_FALSE(report.any_failed());
    EXPECT_EQ(report.rows.size(), 6u);
  }
  EXPECT_THROW(base_transfer_check(chain(3), Subset{0}), ValidationError);
}

TEST(Transfer, ChainRowsHold) {
  const auto report = base_transfer_check(chain(3), Subset::full(3));
  for (const auto& row : report.rows) EXPECT_EQ(row.status(), RowStatus::holds) << row.hypothesis;
  const auto anti = base_transfer_check(antichain(2), Subset::full(2));
  ASSERT_NE(anti.find("bottom"), nullptr);
  EXPECT_EQ(anti.find("bottom")->status(), RowStatus::not_applicable);
  EXPECT_EQ(anti.find("cusl")->status(), RowStatus::not_applicable);
}

}  // namespace
}  // namespace cfkit
