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

// Command implementations behind the cfkit executable. Each command returns
// its exit code and output text instead of writing to the process streams.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cfkit/cf_relations.hpp"
#include "cfkit/cf_space.hpp"
#include "cfkit/dot.hpp"
#include "cfkit/generate.hpp"
#include "cfkit/json_io.hpp"
#include "cfkit/poset.hpp"
#include "cfkit/representation.hpp"
#include "cfkit/rough.hpp"

namespace cfkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

inline Json witness_json(const Witness& w) {
  Json j = Json::object();
  for (const auto& [k, v] : w) {
    if (!j.contains(k)) j[k] = v;
    else if (j[k].is_array()) j[k].push_back(v);
    else j[k] = Json::array({j[k], v});
  }
  return j;
}

inline Json error_json(const Error& e) {
  return Json{{"code", e.code()}, {"message", e.what()}, {"witness", witness_json(e.witness())}};
}

/// Exit code for an error raised while running a command.
inline int exit_code_for(const Error& e) {
  return dynamic_cast<const InputError*>(&e) ? kExitUsage : kExitInvalid;
}

// ---------------------------------------------------------------------------
// Check battery

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckRecord {
  std::string theorem;
  std::string instance;
  CheckStatus status = CheckStatus::pass;
  Witness witness;
};

struct SuiteResult {
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == s; }));
  }
  bool any_failed() const { return count(CheckStatus::fail) > 0; }

  /// One JSON object per line, sorted by instance then theorem.
  std::string jsonl() const {
    auto sorted = records;
    std::sort(sorted.begin(), sorted.end(), [](const CheckRecord& a, const CheckRecord& b) {
      return std::tie(a.instance, a.theorem) < std::tie(b.instance, b.theorem);
    });
    std::string out;
    for (const auto& r : sorted) {
      Json j{{"instance", r.instance}, {"theorem", r.theorem}, {"status", to_string(r.status)}};
      if (!r.witness.empty()) j["witness"] = witness_json(r.witness);
      out += j.dump() + "\n";
    }
    return out;
  }
};

/// A check returns nothing on success or a counterexample.
using Check = std::function<std::optional<Witness>()>;

class Battery {
 public:
  explicit Battery(Guards g) : guards_(g) {}

  const Guards& guards() const { return guards_; }
  SuiteResult& result() { return result_; }

  /// Guard errors become "skipped"; any other library error is a failure
  /// carrying the error's code and witness.
  void run(const std::string& instance, const std::string& theorem, const Check& check) {
    CheckRecord r{theorem, instance, CheckStatus::pass, {}};
    try {
      if (auto w = check()) {
        r.status = CheckStatus::fail;
        r.witness = std::move(*w);
      }
    } catch (const GuardError& e) {
      r.status = CheckStatus::skipped;
      r.witness = e.witness();
    } catch (const Error& e) {
      r.status = CheckStatus::fail;
      r.witness = {{"error", e.code()}, {"message", e.what()}};
      r.witness.insert(r.witness.end(), e.witness().begin(), e.witness().end());
    }
    result_.records.push_back(std::move(r));
  }

 private:
  Guards guards_;
  SuiteResult result_;
};

namespace detail {

/// Every subset when the carrier is small, otherwise a fixed-seed sample.
inline std::vector<Subset> subset_sample(std::size_t n, std::size_t all_up_to, std::size_t samples,
                                         std::uint64_t seed) {
  std::vector<Subset> out;
  if (n <= all_up_to) {
    for_each_subset(Subset::full(n), [&](Subset a) { out.push_back(a); });
    return out;
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(rng.subset(n));
  return out;
}

inline std::optional<Witness> fail_if(bool bad, Witness w) {
  if (bad) return w;
  return std::nullopt;
}

}  // namespace detail

/// Operator laws for an arbitrary relation.
inline void check_ga_space(Battery& b, const std::string& id, const GASpace& s) {
  const std::size_t n = s.size();
  const auto& u = s.universe();
  const auto singles = detail::subset_sample(n, 10, 1000, 0x5eed);
  const auto firsts = detail::subset_sample(n, 6, 64, 0x5eed + 1);
  const auto seconds = detail::subset_sample(n, 6, 64, 0x5eed + 2);
  const Subset all = s.all();
  const auto props = relation_properties(s);

  b.run(id, "rough.duality", [&]() -> std::optional<Witness> {
    for (auto a : singles)
      if (s.lower(a.complement(n)) != s.upper(a).complement(n)) return Witness{{"A", u.format(a)}};
    return std::nullopt;
  });
  b.run(id, "rough.empty_and_full", [&] {
    return detail::fail_if(!s.upper(Subset{}).empty() || s.lower(all) != all, {});
  });
  b.run(id, "rough.distributive", [&]() -> std::optional<Witness> {
    for (auto a : firsts)
      for (auto c : seconds) {
        if (s.upper(a | c) != (s.upper(a) | s.upper(c)))
          return Witness{{"A", u.format(a)}, {"B", u.format(c)}, {"operator", "upper"}};
        if (s.lower(a & c) != (s.lower(a) & s.lower(c)))
          return Witness{{"A", u.format(a)}, {"B", u.format(c)}, {"operator", "lower"}};
      }
    return std::nullopt;
  });
  b.run(id, "rough.monotone", [&]() -> std::optional<Witness> {
    for (auto a : firsts)
      for (auto c : seconds) {
        if (!a.subset_of(c)) continue;
        if (!s.upper(a).subset_of(s.upper(c)) || !s.lower(a).subset_of(s.lower(c)))
          return Witness{{"A", u.format(a)}, {"B", u.format(c)}};
      }
    return std::nullopt;
  });
  b.run(id, "rough.reflexive_iff_inflationary", [&]() -> std::optional<Witness> {
    bool inflationary = true;
    for (auto a : singles)
      if (!a.subset_of(s.upper(a))) inflationary = false;
    if (n <= 10 && inflationary != props.reflexive)
      return Witness{{"reflexive", props.reflexive ? "true" : "false"}};
    if (props.reflexive && !inflationary) return Witness{{"reflexive", "true"}};
    return std::nullopt;
  });
  b.run(id, "rough.transitive_iff_idempotent_upper", [&]() -> std::optional<Witness> {
    bool contracting = true;
    for (auto a : singles)
      if (!s.upper(s.upper(a)).subset_of(s.upper(a))) contracting = false;
    if (n <= 10 && contracting != props.transitive)
      return Witness{{"transitive", props.transitive ? "true" : "false"}};
    if (props.transitive && !contracting) return Witness{{"transitive", "true"}};
    return std::nullopt;
  });
  b.run(id, "rough.transitive_upper_bound", [&]() -> std::optional<Witness> {
    if (!props.transitive) return std::nullopt;
    for (auto a : firsts)
      for (auto c : seconds)
        if (c.subset_of(s.upper(a)) && !s.upper(c).subset_of(s.upper(a)))
          return Witness{{"A", u.format(a)}, {"B", u.format(c)}};
    return std::nullopt;
  });
  b.run(id, "rough.tau_engines", [&] {
    const auto g = b.guards();
    return detail::fail_if(tau_r(s, Engine::oracle, g) != tau_r(s, Engine::reduced, g), {});
  });
  b.run(id, "rough.closed_are_complements_of_open", [&]() -> std::optional<Witness> {
    const auto opens = tau_r(s, Engine::reduced, b.guards());
    std::vector<Subset> closed, complements;
    for_each_subset(all, [&](Subset a) {
      if (is_r_closed(s, a)) closed.push_back(a);
    });
    for (auto o : opens) complements.push_back(o.complement(n));
    if (canonical_family(complements) != closed) return Witness{};
    return std::nullopt;
  });
}

/// Order-core and representation checks on a poset.
inline void check_poset(Battery& b, const std::string& id, const FinPoset& p) {
  const auto& g = b.guards();
  const std::size_t n = p.size();

  b.run(id, "order.way_below_is_leq", [&]() -> std::optional<Witness> {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (way_below(p, x, y, g) != way_below_shortcut(p, x, y))
          return Witness{{"x", p.label(x)}, {"y", p.label(y)}};
    return std::nullopt;
  });
  b.run(id, "order.way_below_laws", [&]() -> std::optional<Witness> {
    const BoolMatrix wb = way_below_relation(p, Engine::oracle, g);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!wb(x, y)) continue;
        if (!p.leq(x, y)) return Witness{{"x", p.label(x)}, {"y", p.label(y)}};
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t z = 0; z < n; ++z)
            if (p.leq(w, x) && p.leq(y, z) && !wb(w, z))
              return Witness{{"u", p.label(w)}, {"x", p.label(x)}, {"y", p.label(y)}, {"z", p.label(z)}};
        bool interpolated = false;
        for (std::size_t m = 0; m < n; ++m)
          if (wb(x, m) && wb(m, y)) interpolated = true;
        if (!interpolated) return Witness{{"x", p.label(x)}, {"z", p.label(y)}};
      }
    return std::nullopt;
  });
  b.run(id, "order.finite_is_continuous", [&] {
    return detail::fail_if(!classify(p, Engine::reduced, g).is_continuous, {});
  });
  b.run(id, "order.classify_engines", [&] {
    return detail::fail_if(classify(p, Engine::reduced, g) != classify(p, Engine::oracle, g), {});
  });
  b.run(id, "order.scott_iff_monotone", [&]() -> std::optional<Witness> {
    enforce_guard("all self-maps", n, std::min<std::size_t>(g.map_enumeration, 5));
    auto shared = std::make_shared<const FinPoset>(p);
    std::vector<std::size_t> table(n, 0);
    std::function<std::optional<Witness>(std::size_t)> walk = [&](std::size_t x) -> std::optional<Witness> {
      if (x == n) {
        const MonoMap f{shared, shared, table};
        if (is_scott_continuous(f, g) != is_monotone(p, p, table)) {
          Witness w;
          for (std::size_t i = 0; i < n; ++i) w.emplace_back(p.label(i), p.label(table[i]));
          return w;
        }
        return std::nullopt;
      }
      for (std::size_t y = 0; y < n; ++y) {
        table[x] = y;
        if (auto w = walk(x + 1)) return w;
      }
      return std::nullopt;
    };
    return walk(0);
  });
  b.run(id, "order.isomorphism_equivalence", [&]() -> std::optional<Witness> {
    if (!order_isomorphic(p, p)) return Witness{{"law", "reflexive"}};
    // A relabelled copy: reverse the element order.
    auto q = FinPoset::from_predicate(p.labels(), [&](std::size_t x, std::size_t y) {
      return p.leq(n - 1 - x, n - 1 - y);
    });
    auto h = order_isomorphic(p, q);
    if (!h) return Witness{{"law", "relabelling"}};
    std::vector<std::size_t> inv(n);
    for (std::size_t x = 0; x < n; ++x) inv[(*h)[x]] = x;
    if (!is_order_isomorphism(q, p, inv) || !order_isomorphic(q, p)) return Witness{{"law", "symmetric"}};
    return std::nullopt;
  });
  b.run(id, "order.base_transfer", [&]() -> std::optional<Witness> {
    for (Subset basis : {p.elements(), compacts(p)}) {
      const auto report = base_transfer_check(p, basis, g);
      for (const auto& row : report.rows)
        if (row.status() == RowStatus::failed)
          return Witness{{"basis", format_indices(basis)}, {"hypothesis", row.hypothesis}};
    }
    return std::nullopt;
  });
  b.run(id, "rep.closed_sets_are_waydown", [&] { return detail::fail_if(!verify_closed_sets_are_waydown(p, g), {}); });
  b.run(id, "rep.roundtrip", [&] {
    representation_roundtrip(p, g);
    return std::optional<Witness>{};
  });
  b.run(id, "rep.full_mode_agrees", [&]() -> std::optional<Witness> {
    const CFSpace canon = cf_space_from_domain(p, FamilyMode::canonical, g);
    const CFSpace full = cf_space_from_domain(p, FamilyMode::full, g);
    const auto c1 = enumerate_cf_closed(canon).sets;
    const auto c2 = enumerate_cf_closed(full).sets;
    if (c1 != c2) return Witness{{"difference", "closed sets"}};
    for (auto e1 : c1)
      for (auto e2 : c1)
        if (cf_way_below(canon, e1, e2) != cf_way_below(full, e1, e2))
          return Witness{{"E1", canon.format(e1)}, {"E2", canon.format(e2)}};
    return std::nullopt;
  });
  b.run(id, "rep.algebraic", [&] {
    algebraic_cf_space(p, FamilyMode::canonical, g);
    return std::optional<Witness>{};
  });
  b.run(id, "rep.round_ideals_of_way_below", [&] {
    const auto ri = round_ideals(way_below_basis(p), g);
    return detail::fail_if(!order_isomorphic(*ri.order, p), {});
  });
}

/// Relation-level laws for one valid relation.
inline void check_approx_rel(Battery& b, const std::string& id, const ApproxRel& theta) {
  const auto& g = b.guards();
  const CFSpace& src = *theta.source();
  const CFSpace& tgt = *theta.target();
  auto pair_witness = [&](std::size_t f, std::size_t gi) {
    return Witness{{"F", src.format(src.member(f))}, {"G", tgt.format(tgt.member(gi))}};
  };

  b.run(id, "rel.four_forms_agree", [&]() -> std::optional<Witness> {
    for (std::size_t f = 0; f < src.family_size(); ++f)
      for (std::size_t gi = 0; gi < tgt.family_size(); ++gi) {
        const auto forms = relation_forms(theta, f, gi);
        if (!std::all_of(forms.begin(), forms.end(), [&](bool v) { return v == forms[0]; }))
          return pair_witness(f, gi);
      }
    return std::nullopt;
  });
  b.run(id, "rel.tilde_characterizes", [&]() -> std::optional<Witness> {
    for (std::size_t f = 0; f < src.family_size(); ++f) {
      const Subset t = theta_tilde(theta, f);
      for (std::size_t gi = 0; gi < tgt.family_size(); ++gi)
        if (tgt.member(gi).subset_of(t) != theta.related(f, gi)) return pair_witness(f, gi);
    }
    return std::nullopt;
  });
  b.run(id, "rel.induced_map_continuous", [&]() -> std::optional<Witness> {
    const CFDomain d1 = domain_of(src, g);
    const CFDomain d2 = domain_of(tgt, g);
    const MonoMap f = f_theta(theta, d1, d2);
    if (!is_scott_continuous(f, g)) return Witness{{"property", "scott"}};
    for (std::size_t fi = 0; fi < src.family_size(); ++fi) {
      const auto e = *d1.family.index_of(src.upper(fi));
      if (d2.family.sets[f(e)] != theta_tilde(theta, fi))
        return Witness{{"F", src.format(src.member(fi))}, {"property", "f(R(F)) = tilde(F)"}};
    }
    return std::nullopt;
  });
  b.run(id, "rel.roundtrip_theta", [&] { return detail::fail_if(!roundtrip_theta(theta, g), {}); });
  b.run(id, "rel.unit_laws", [&]() -> std::optional<Witness> {
    const ApproxRel id_src = identity_rel(theta.source());
    const ApproxRel id_tgt = identity_rel(theta.target());
    if (!(compose_rel(theta, id_src) == theta)) return Witness{{"law", "theta . id"}};
    if (!(compose_rel(id_tgt, theta) == theta)) return Witness{{"law", "id . theta"}};
    return std::nullopt;
  });
}

/// CF-space checks, including relation laws on the identity and an
/// equivalence report of the space against itself.
inline void check_cf_space(Battery& b, const std::string& id, const CFSpace& s) {
  const auto& g = b.guards();
  const auto& u = s.universe();
  const std::size_t n = u.size();

  b.run(id, "cf.validate_engines", [&] {
    validate_cf_space(s.ga(), s.family(), Engine::oracle, g);
    return std::optional<Witness>{};
  });
  b.run(id, "cf.closed_engines", [&] {
    return detail::fail_if(enumerate_cf_closed(s, Engine::reduced, g).sets !=
                               enumerate_cf_closed(s, Engine::oracle, g).sets,
                           {});
  });
  b.run(id, "cf.characterizations_agree", [&]() -> std::optional<Witness> {
    enforce_guard("closedness characterizations", n, g.subset_iteration);
    std::optional<Witness> w;
    for_each_subset(u.all(), [&](Subset e) {
      if (w) return;
      const bool d = is_cf_closed_by(s, e, Characterization::definition, g);
      for (auto c : {Characterization::family_below, Characterization::some_subfamily,
                     Characterization::finite_witness})
        if (is_cf_closed_by(s, e, c, g) != d) w = Witness{{"E", u.format(e)}};
      if (is_cf_closed(s, e, Engine::reduced, g) != d) w = Witness{{"E", u.format(e)}, {"engine", "reduced"}};
    });
    return w;
  });

  const CFFamily closed = enumerate_cf_closed(s);
  b.run(id, "cf.closed_sets_are_r_closed", [&]() -> std::optional<Witness> {
    for (auto e : closed.sets)
      if (!is_r_closed(s.ga(), e)) return Witness{{"E", u.format(e)}};
    return std::nullopt;
  });
  b.run(id, "cf.upper_stays_inside", [&]() -> std::optional<Witness> {
    for (auto e : closed.sets) {
      std::optional<Witness> w;
      if (e.size() > g.subset_iteration) continue;
      for_each_subset(e, [&](Subset a) {
        if (!w && !s.ga().upper(a).subset_of(e)) w = Witness{{"E", u.format(e)}, {"A", u.format(a)}};
      });
      if (w) return w;
    }
    return std::nullopt;
  });
  b.run(id, "cf.directed_unions_closed", [&]() -> std::optional<Witness> {
    enforce_guard("directed subfamilies", closed.size(), g.subset_iteration);
    std::optional<Witness> w;
    for_each_subset(Subset::full(closed.size()), [&](Subset idx) {
      if (w || !closed.order->is_directed(idx)) return;
      Subset un;
      idx.for_each([&](std::size_t i) { un |= closed.sets[i]; });
      if (!closed.index_of(un)) w = Witness{{"union", u.format(un)}};
    });
    return w;
  });
  b.run(id, "cf.way_below_agrees", [&]() -> std::optional<Witness> {
    const FinPoset& order = *closed.order;
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = 0; j < closed.size(); ++j)
        if (cf_way_below(s, closed.sets[i], closed.sets[j]) != way_below(order, i, j, g))
          return Witness{{"E1", u.format(closed.sets[i])}, {"E2", u.format(closed.sets[j])}};
    return std::nullopt;
  });
  b.run(id, "cf.basis_way_below", [&]() -> std::optional<Witness> {
    for (std::size_t f = 0; f < s.family_size(); ++f)
      for (auto e : closed.sets)
        if (s.member(f).subset_of(e) && !cf_way_below(s, s.upper(f), e))
          return Witness{{"F", u.format(s.member(f))}, {"E", u.format(e)}};
    return std::nullopt;
  });
  b.run(id, "cf.empty_closed_needs_empty_member", [&] {
    return detail::fail_if(closed.index_of(Subset{}).has_value() && !s.index_of(Subset{}).has_value(), {});
  });
  b.run(id, "cf.domain_is_continuous", [&] {
    domain_of(s, g);
    return std::optional<Witness>{};
  });
  b.run(id, "cf.topological_compacts", [&] {
    is_topological(s);
    return std::optional<Witness>{};
  });
  b.run(id, "rep.special_domain_transfer", [&]() -> std::optional<Witness> {
    for (const auto& row : special_domain_transfer(s, g).rows)
      if (row.status() == RowStatus::failed) return Witness{{"hypothesis", row.hypothesis}};
    return std::nullopt;
  });

  auto shared = share(s);
  b.run(id, "rel.identity_functor", [&]() -> std::optional<Witness> {
    const ApproxRel idr = identity_rel(shared);
    const MonoMap f = f_theta(idr, g);
    for (std::size_t i = 0; i < f.table.size(); ++i)
      if (f.table[i] != i) return Witness{{"E", u.format(closed.sets[i])}};
    if (!(compose_rel(idr, idr) == idr)) return Witness{{"law", "id . id"}};
    return std::nullopt;
  });
  b.run(id, "rel.equivalence_self", [&]() -> std::optional<Witness> {
    const auto rep = equivalence_report(shared, shared, g);
    if (!rep.certified())
      return Witness{{"relations", std::to_string(rep.relation_count)}, {"maps", std::to_string(rep.map_count)}};
    const CFDomain d = domain_of(s, g);
    std::vector<MonoMap> maps;
    for (const auto& t : rep.maps) maps.push_back(MonoMap{d.family.order, d.family.order, t});
    for (const auto& f : maps)
      if (!roundtrip_map(shared, shared, f, g)) return Witness{{"law", "map roundtrip"}};
    // Functor law on every pair of induced relations.
    std::vector<ApproxRel> thetas;
    for (const auto& f : maps) thetas.push_back(theta_from_map(shared, shared, f, d, d));
    for (std::size_t i = 0; i < thetas.size(); ++i)
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        const auto lhs = f_theta(compose_rel(thetas[j], thetas[i]), d, d).table;
        if (lhs != compose(maps[j], maps[i]).table)
          return Witness{{"law", "functor composition"}, {"i", std::to_string(i)}, {"j", std::to_string(j)}};
      }
    return std::nullopt;
  });
}

/// Round-ideal and interpolation checks on a transitive relation.
inline void check_abstract_basis(Battery& b, const std::string& id, const AbstractBasis& basis) {
  const auto& g = b.guards();
  b.run(id, "basis.interpolation_engines", [&] {
    const auto r = interpolation_failures(basis.relation(), Engine::reduced, g);
    const auto o = interpolation_failures(basis.relation(), Engine::oracle, g);
    return detail::fail_if(r.size() != o.size(), {});
  });
  b.run(id, "basis.closed_sets_are_round_ideals", [&] {
    return detail::fail_if(!cf_equals_round_ideals(basis.relation(), g), {});
  });
  b.run(id, "basis.round_ideal_order", [&] {
    std::vector<Subset> singletons;
    for (std::size_t x = 0; x < basis.size(); ++x) singletons.push_back(Subset::singleton(x));
    const CFSpace s = validate_cf_space(basis.relation(), singletons);
    return detail::fail_if(!order_isomorphic(*round_ideals(basis, g).order, *enumerate_cf_closed(s).order), {});
  });
}

/// Validates an instance and runs every applicable check. An invalid
/// instance yields a single failing "instance.valid" record.
inline void check_instance(Battery& b, const std::string& id, const Instance& inst) {
  try {
    switch (inst.kind) {
      case InstanceKind::poset: {
        const FinPoset p = to_poset(inst);
        b.run(id, "instance.valid", [] { return std::optional<Witness>{}; });
        check_poset(b, id, p);
        break;
      }
      case InstanceKind::ga_space:
        b.run(id, "instance.valid", [] { return std::optional<Witness>{}; });
        check_ga_space(b, id, inst.ga());
        break;
      case InstanceKind::cf_space: {
        const CFSpace s = to_cf_space(inst.cf());
        b.run(id, "instance.valid", [] { return std::optional<Witness>{}; });
        check_ga_space(b, id, s.ga());
        check_cf_space(b, id, s);
        break;
      }
      case InstanceKind::abstract_basis: {
        const AbstractBasis basis = validate_abstract_basis(inst.ga());
        b.run(id, "instance.valid", [] { return std::optional<Witness>{}; });
        check_abstract_basis(b, id, basis);
        break;
      }
      case InstanceKind::approx_rel: {
        const ApproxRel theta = to_approx_rel(inst.rel(), b.guards());
        b.run(id, "instance.valid", [] { return std::optional<Witness>{}; });
        check_approx_rel(b, id, theta);
        break;
      }
    }
  } catch (const ValidationError& e) {
    b.run(id, "instance.valid", [&]() -> std::optional<Witness> {
      Witness w{{"error", e.code()}};
      w.insert(w.end(), e.witness().begin(), e.witness().end());
      return w;
    });
  }
}

/// Seeded random instances of every kind, deterministic per seed.
inline std::vector<std::pair<std::string, Instance>> random_instances(std::size_t count, std::uint64_t seed) {
  std::vector<std::pair<std::string, Instance>> out;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::ostringstream id;
    id << "random-" << seed << "-" << i;
    Meta meta{id.str(), seed, {}};
    switch (i % 5) {
      case 0: out.emplace_back(id.str(), make_instance(random_poset(1 + rng.below(5), rng), meta)); break;
      case 1: out.emplace_back(id.str(), make_instance(random_ga_space(rng.below(9), rng), meta)); break;
      case 2: {
        const auto n = 1 + rng.below(5);
        const auto k = rng.below(std::min<std::size_t>(5, std::size_t{1} << n));
        out.emplace_back(id.str(), make_instance(generate_cf_space(n, k, rng.next(), rng.chance(1, 2)).space, meta));
        break;
      }
      case 3: {
        // Reflexive transitive relations always interpolate.
        GASpace s = random_transitive_space(1 + rng.below(5), rng, rng.chance(1, 2));
        const bool ok = interpolation_failures(s).empty();
        out.emplace_back(id.str(), make_instance(ok ? s : reflexive_closure(s), meta, true));
        break;
      }
      case 4: {
        auto small_space = [&] {
          const auto n = 1 + rng.below(4);
          const auto k = 1 + rng.below(std::min<std::size_t>(3, std::size_t{1} << n));
          return share(generate_cf_space(n, k, rng.next()).space);
        };
        auto s1 = small_space();
        auto s2 = small_space();
        const CFDomain d1 = domain_of(*s1);
        const CFDomain d2 = domain_of(*s2);
        const auto tables = enumerate_monotone_tables(d1.order(), d2.order());
        const MonoMap f{d1.family.order, d2.family.order, tables[rng.below(tables.size())]};
        out.emplace_back(id.str(), make_instance(theta_from_map(s1, s2, f, d1, d2), meta));
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

namespace detail {

template <typename F>
CommandResult guarded_command(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = exit_code_for(e);
    r.err = error_json(e).dump() + "\n";
    return r;
  }
}

}  // namespace detail

inline CommandResult cmd_validate(const std::string& path, const Guards& g = Guards::from_env()) {
  return detail::guarded_command([&] {
    const Instance inst = load_instance(path);
    CommandResult r;
    Json report{{"kind", to_string(inst.kind)}, {"status", "valid"}};
    try {
      switch (inst.kind) {
        case InstanceKind::poset: to_poset(inst); break;
        case InstanceKind::ga_space: {
          const auto p = relation_properties(inst.ga());
          report["reflexive"] = p.reflexive;
          report["transitive"] = p.transitive;
          break;
        }
        case InstanceKind::cf_space: {
          const CFSpace s = to_cf_space(inst.cf(), Engine::reduced, g);
          if (s.family_size() == 0) r.err += "warning: EmptyDomain: the family is empty\n";
          break;
        }
        case InstanceKind::abstract_basis: validate_abstract_basis(inst.ga(), Engine::reduced, g); break;
        case InstanceKind::approx_rel: to_approx_rel(inst.rel(), g); break;
      }
    } catch (const ValidationError& e) {
      report = Json{{"kind", to_string(inst.kind)}, {"status", "invalid"}};
      report.update(error_json(e));
      r.exit_code = kExitInvalid;
    }
    r.out = report.dump() + "\n";
    return r;
  });
}

inline CommandResult cmd_closed_sets(const std::string& path, bool oracle,
                                     const Guards& g = Guards::from_env()) {
  return detail::guarded_command([&] {
    const Instance inst = load_instance(path);
    if (inst.kind != InstanceKind::cf_space)
      throw InputError("UnsupportedKind", "closed-sets needs a cf_space instance",
                       {{"kind", to_string(inst.kind)}});
    const CFSpace s = to_cf_space(inst.cf(), oracle ? Engine::oracle : Engine::reduced, g);
    CommandResult r;
    const auto sets = enumerate_cf_closed(s, Engine::reduced, g).sets;
    if (oracle && enumerate_cf_closed(s, Engine::oracle, g).sets != sets)
      throw TheoremViolation("EngineDisagreement", "reduced and oracle closed sets differ");
    for (auto e : sets) r.out += s.format(e) + "\n";
    if (sets.empty()) r.err += "warning: EmptyDomain: no closed sets\n";
    return r;
  });
}

/// Runs the battery over files (directories are expanded to their *.json
/// files) and `random_count` seeded random instances.
inline CommandResult cmd_check(const std::vector<std::string>& paths, std::size_t random_count,
                               std::uint64_t seed, const Guards& g = Guards::from_env()) {
  return detail::guarded_command([&] {
    namespace fs = std::filesystem;
    Battery b(g);
    std::vector<std::string> files;
    for (const auto& p : paths) {
      if (fs::is_directory(p)) {
        for (const auto& e : fs::directory_iterator(p))
          if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
      } else {
        files.push_back(p);
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const std::string id = fs::path(f).filename().string();
      try {
        check_instance(b, id, load_instance(f));
      } catch (const InputError& e) {
        b.run(id, "instance.parse", [&]() -> std::optional<Witness> {
          Witness w{{"error", e.code()}};
          w.insert(w.end(), e.witness().begin(), e.witness().end());
          return w;
        });
      }
    }
    for (const auto& [id, inst] : random_instances(random_count, seed)) check_instance(b, id, inst);
    CommandResult r;
    r.out = b.result().jsonl();
    std::ostringstream summary;
    summary << b.result().records.size() << " checks: " << b.result().count(CheckStatus::pass) << " pass, "
            << b.result().count(CheckStatus::fail) << " fail, " << b.result().count(CheckStatus::skipped)
            << " skipped\n";
    r.err = summary.str();
    r.exit_code = b.result().any_failed() ? kExitInvalid : kExitOk;
    return r;
  });
}

inline CommandResult cmd_gen(std::size_t universe, std::size_t family, std::uint64_t seed, bool topological) {
  return detail::guarded_command([&] {
    const GeneratedSpace gen = generate_cf_space(universe, family, seed, topological);
    std::ostringstream notes;
    notes << "accepted after " << gen.attempts << " attempt" << (gen.attempts == 1 ? "" : "s")
          << " (acceptance rate " << 1.0 / static_cast<double>(gen.attempts) << ")";
    std::ostringstream name;
    name << "gen-n" << universe << "-k" << family << (topological ? "-top" : "");
    CommandResult r;
    r.out = export_json(make_instance(gen.space, Meta{name.str(), seed, notes.str()}));
    if (gen.space.family_size() == 0) r.err = "warning: EmptyDomain: the family is empty\n";
    return r;
  });
}

enum class ExportFormat { json, dot };

inline CommandResult cmd_export(const std::string& path, ExportFormat format, const Guards& g = Guards::from_env()) {
  return detail::guarded_command([&] {
    const Instance inst = load_instance(path);
    CommandResult r;
    // Exported instances must be valid.
    switch (inst.kind) {
      case InstanceKind::poset: {
        const FinPoset p = to_poset(inst);
        r.out = format == ExportFormat::dot ? hasse_dot(p, inst.meta.name.empty() ? "poset" : inst.meta.name)
                                            : export_json(inst);
        return r;
      }
      case InstanceKind::cf_space: {
        const CFSpace s = to_cf_space(inst.cf(), Engine::reduced, g);
        r.out = format == ExportFormat::dot
                    ? hasse_dot(*enumerate_cf_closed(s).order, inst.meta.name.empty() ? "closed_sets" : inst.meta.name)
                    : export_json(inst);
        return r;
      }
      case InstanceKind::abstract_basis: validate_abstract_basis(inst.ga(), Engine::reduced, g); break;
      case InstanceKind::approx_rel: to_approx_rel(inst.rel(), g); break;
      case InstanceKind::ga_space: break;
    }
    if (format == ExportFormat::dot)
      throw InputError("UnsupportedKind", "DOT export needs a poset or cf_space instance",
                       {{"kind", to_string(inst.kind)}});
    r.out = export_json(inst);
    return r;
  });
}

inline CommandResult cmd_represent(const std::string& path, const Guards& g = Guards::from_env()) {
  return detail::guarded_command([&] {
    const Instance inst = load_instance(path);
    if (inst.kind != InstanceKind::poset)
      throw InputError("UnsupportedKind", "represent needs a poset instance", {{"kind", to_string(inst.kind)}});
    const FinPoset p = to_poset(inst);
    const Representation rep = representation_roundtrip(p, g);
    Meta meta{inst.meta.name.empty() ? "represented" : "represented-" + inst.meta.name, inst.meta.seed,
              "canonical space of the poset; witness maps each element x to its way-down set"};
    Json j = instance_to_json(make_instance(rep.space, meta));
    Json w = Json::object();
    for (std::size_t x = 0; x < p.size(); ++x) w[p.label(x)] = rep.space.format(rep.waydown[x]);
    j["witness"] = w;
    CommandResult r;
    r.out = dump_json(j);
    return r;
  });
}

}  // namespace cfkit
