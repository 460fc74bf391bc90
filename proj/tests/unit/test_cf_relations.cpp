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

#include "helpers.hpp"

namespace cfkit {
namespace {

using testing::ex1;
using testing::to_mask;
using testing::to_masks;
using testing::to_oracle;

// Canonical family order of the worked example: {}, {1}, {1,2}, {5}, {6}.
constexpr std::size_t kEmpty = 0, kOne = 1, kOneTwo = 2, kFive = 3, kSix = 4;

oracle::Matrix oracle_matrix(const ApproxRel& theta) {
  oracle::Matrix m(theta.source()->family_size(), std::vector<bool>(theta.target()->family_size()));
  for (auto [f, g] : theta.pairs()) m[f][g] = true;
  return m;
}

bool oracle_accepts(const CFSpace& a, const CFSpace& b, const BoolMatrix& m) {
  oracle::Matrix t(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m(i, j);
  return oracle::approximable(to_oracle(a.ga()), to_masks(a.family()), to_oracle(b.ga()), to_masks(b.family()), t);
}

TEST(Identity, WorkedExamplePairs) {
  const auto s = share(ex1());
  const ApproxRel id = identity_rel(s);
  EXPECT_TRUE(id.related(kOneTwo, kOne));
  EXPECT_FALSE(id.related(kOne, kOneTwo));
  for (std::size_t f = 0; f < s->family_size(); ++f) EXPECT_TRUE(id.related(f, kEmpty));
  EXPECT_TRUE(oracle::approximable(to_oracle(s->ga()), to_masks(s->family()), to_oracle(s->ga()),
                                   to_masks(s->family()), oracle_matrix(id)));
  EXPECT_EQ(theta_tilde(id, kOne), Subset{0});
  EXPECT_EQ(theta_tilde(id, kSix), Subset{5});
  const MonoMap f = f_theta(id);
  for (std::size_t i = 0; i < f.table.size(); ++i) EXPECT_EQ(f(i), i);
  EXPECT_EQ(theta_from_map(s, s, f), id);
  EXPECT_EQ(compose_rel(id, id), id);
}

TEST(Validate, EmptyPairsViolateTotality) {
  const auto s = share(ex1());
  try {
    validate_approx_rel(s, s, std::vector<std::pair<std::size_t, std::size_t>>{});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "AxiomViolated");
    EXPECT_EQ(e.witness_value("axiom"), "1");
    EXPECT_EQ(e.witness_value("F"), "{}");
  }
}

TEST(Validate, ShapeErrors) {
  const auto s = share(ex1());
  EXPECT_THROW(validate_approx_rel(s, s, BoolMatrix(2, 5)), InputError);
  try {
    validate_approx_rel(s, s, std::vector<std::pair<std::size_t, std::size_t>>{{0, 9}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), "IndexOutOfRange");
  }
  EXPECT_THROW(theta_tilde(identity_rel(s), 17), InputError);
}

TEST(Validate, EachAxiomCanBeViolated) {
  const auto s = share(ex1());
  std::set<std::string> seen;
  const std::size_t n = s->family_size();
  Rng rng(3);
  for (int trial = 0; trial < 4000; ++trial) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.chance(1, 2));
    // Keep every row nonempty so later axioms get exercised.
    for (std::size_t i = 0; i < n; ++i)
      if (rng.chance(9, 10)) m.set(i, rng.below(n));
    try {
      validate_approx_rel(s, s, m);
      EXPECT_TRUE(oracle_accepts(*s, *s, m));
    } catch (const ValidationError& e) {
      EXPECT_FALSE(oracle_accepts(*s, *s, m));
      seen.insert(e.witness_value("axiom"));
    }
  }
  EXPECT_TRUE(seen.count("1"));
  EXPECT_TRUE(seen.count("2"));
  EXPECT_TRUE(seen.count("3"));
}

TEST(Map, ConstantToBottomRelatesOnlyEmptyMember) {
  const auto s = share(ex1());
  const CFDomain d = domain_of(*s);
  const MonoMap bottom = MonoMap::make(d.family.order, d.family.order, std::vector<std::size_t>(d.family.size(), 0));
  const ApproxRel theta = theta_from_map(s, s, bottom);
  for (auto [f, g] : theta.pairs()) EXPECT_EQ(g, kEmpty);
  EXPECT_EQ(theta.pairs().size(), s->family_size());
  EXPECT_EQ(f_theta(theta).table, bottom.table);
}

TEST(Map, RejectsForeignOrNonMonotoneMaps) {
  const auto s = share(ex1());
  const CFDomain d = domain_of(*s);
  auto other = std::make_shared<const FinPoset>(testing::chain(4));
  EXPECT_THROW(theta_from_map(s, s, MonoMap{other, other, {0, 1, 2, 3}}), InputError);
  // {} -> {6}, {1} -> {}: breaks {} ⊆ {1}.
  EXPECT_THROW(theta_from_map(s, s, MonoMap{d.family.order, d.family.order, {3, 0, 0, 0}}), ValidationError);
}

TEST(Compose, SpaceMismatch) {
  const auto a = share(ex1());
  const auto b = share(generate_cf_space(2, 2, 4).space);
  EXPECT_THROW(compose_rel(identity_rel(a), identity_rel(b)), InputError);
}

/// Pairs of small generated spaces.
std::vector<std::pair<SpacePtr, SpacePtr>> space_pairs(std::uint64_t seed, int count, std::size_t max_k) {
  Rng rng(seed);
  std::vector<std::pair<SpacePtr, SpacePtr>> out;
  auto make = [&] {
    const std::size_t n = 2 + rng.below(3);
    const std::size_t k = 1 + rng.below(max_k);
    return share(generate_cf_space(n, k, rng.next(), rng.chance(1, 3)).space);
  };
  for (int i = 0; i < count; ++i) {
    auto a = make();
    out.emplace_back(a, rng.chance(1, 5) ? a : make());
  }
  return out;
}

TEST(Enumerate, MatchesExhaustiveOracleAndMapCount) {
  std::size_t total = 0;
  for (const auto& [a, b] : space_pairs(10, 200, 4)) {
    const auto rels = enumerate_approx_rels(*a, *b);
    total += rels.size();
    for (const auto& m : rels) EXPECT_TRUE(oracle_accepts(*a, *b, m));
    const CFDomain d1 = domain_of(*a), d2 = domain_of(*b);
    EXPECT_EQ(rels.size(), oracle::count_monotone(to_oracle(d1.order()), to_oracle(d2.order())));
    if (a->family_size() * b->family_size() > 12) continue;
    const std::size_t expected = oracle::count_approximable(to_oracle(a->ga()), to_masks(a->family()),
                                                            to_oracle(b->ga()), to_masks(b->family()));
    EXPECT_EQ(rels.size(), expected);
  }
  EXPECT_GT(total, 300u);
}

TEST(Relations, PropertiesOfEveryValidRelation) {
  for (const auto& [a, b] : space_pairs(20, 80, 4)) {
    const CFDomain d1 = domain_of(*a), d2 = domain_of(*b);
    for (const auto& m : enumerate_approx_rels(*a, *b)) {
      const ApproxRel theta = validate_approx_rel(a, b, m);
      for (std::size_t f = 0; f < a->family_size(); ++f) {
        const Subset tilde = theta_tilde(theta, f);
        for (std::size_t g = 0; g < b->family_size(); ++g) {
          const auto forms = relation_forms(theta, f, g);
          EXPECT_TRUE(forms[0] == forms[1] && forms[1] == forms[2] && forms[2] == forms[3]);
          EXPECT_EQ(b->member(g).subset_of(tilde), theta.related(f, g));
        }
      }
      const MonoMap fm = f_theta(theta, d1, d2);
      EXPECT_TRUE(is_scott_continuous(fm));
      for (std::size_t f = 0; f < a->family_size(); ++f)
        EXPECT_EQ(d2.family.sets[fm(*d1.family.index_of(a->upper(f)))], theta_tilde(theta, f));
      EXPECT_TRUE(roundtrip_theta(theta));
      const ApproxRel id1 = identity_rel(a), id2 = identity_rel(b);
      EXPECT_EQ(compose_rel(theta, id1), theta);
      EXPECT_EQ(compose_rel(id2, theta), theta);
    }
    for (const auto& m : enumerate_monotone_maps(d1.family.order, d2.family.order))
      EXPECT_TRUE(roundtrip_map(a, b, m));
  }
}

TEST(Relations, CompositionIsAssociativeAndFunctorial) {
  Rng rng(30);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SpacePtr> s;
    for (int i = 0; i < 4; ++i) {
      const std::size_t n = 1 + rng.below(3);
      s.push_back(share(generate_cf_space(n, 1 + rng.below(std::min<std::size_t>(3, std::size_t{1} << n)),
                                          rng.next()).space));
    }
    auto pick = [&](std::size_t i) {
      const auto all = enumerate_approx_rels(*s[i], *s[i + 1]);
      return validate_approx_rel(s[i], s[i + 1], all[rng.below(all.size())]);
    };
    const ApproxRel xi = pick(0), theta = pick(1), upsilon = pick(2);
    EXPECT_EQ(compose_rel(compose_rel(upsilon, theta), xi), compose_rel(upsilon, compose_rel(theta, xi)));
    EXPECT_EQ(f_theta(compose_rel(theta, xi)).table, compose(f_theta(theta), f_theta(xi)).table);
    EXPECT_TRUE(oracle::approximable(to_oracle(s[0]->ga()), to_masks(s[0]->family()), to_oracle(s[2]->ga()),
                                     to_masks(s[2]->family()), oracle_matrix(compose_rel(theta, xi))));
  }
}

TEST(Equivalence, WorkedExampleIsCertified) {
  const auto s = share(ex1());
  const auto r = equivalence_report(s, s);
  EXPECT_EQ(r.relation_count, r.map_count);
  EXPECT_EQ(r.map_count, oracle::count_monotone(to_oracle(domain_of(*s).order()), to_oracle(domain_of(*s).order())));
  EXPECT_TRUE(r.certified());
}

TEST(Equivalence, DegenerateDomains) {
  const GASpace one(FinUniverse::numbered(1), BoolMatrix(1, 1));
  const auto single = share(validate_cf_space(one, {Subset{}}));
  const auto empty = share(validate_cf_space(one, {}));
  auto r = equivalence_report(single, single);
  EXPECT_EQ(r.relation_count, 1u);
  EXPECT_EQ(r.map_count, 1u);
  EXPECT_TRUE(r.certified());
  r = equivalence_report(empty, single);
  EXPECT_EQ(r.relation_count, 1u);
  EXPECT_EQ(r.map_count, 1u);
  r = equivalence_report(single, empty);
  EXPECT_EQ(r.relation_count, 0u);
  EXPECT_EQ(r.map_count, 0u);
  EXPECT_TRUE(r.faithful && r.full);
}

TEST(Equivalence, GuardTrips) {
  Guards g;
  g.relation_domain = 3;
  const auto s = share(ex1());
  EXPECT_THROW(equivalence_report(s, s, g), GuardError);
  g = Guards{};
  g.relation_family = 4;
  EXPECT_THROW(enumerate_approx_rels(*s, *s, g), GuardError);
}

}  // namespace
}  // namespace cfkit
