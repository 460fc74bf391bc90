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

// Instance files. Parsing produces raw payloads; validation is left to the
// module validators so that invalid instances can still be loaded and
// reported on.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfkit/cf_relations.hpp"
#include "cfkit/cf_space.hpp"
#include "cfkit/error.hpp"
#include "cfkit/poset.hpp"
#include "cfkit/rough.hpp"
#include "cfkit/subset.hpp"

namespace cfkit {

using Json = nlohmann::json;

enum class InstanceKind { poset, ga_space, cf_space, abstract_basis, approx_rel };

inline const char* to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::poset: return "poset";
    case InstanceKind::ga_space: return "ga_space";
    case InstanceKind::cf_space: return "cf_space";
    case InstanceKind::abstract_basis: return "abstract_basis";
    case InstanceKind::approx_rel: return "approx_rel";
  }
  return "?";
}

struct Meta {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::string notes;

  bool empty() const { return name.empty() && !seed && notes.empty(); }
};

struct PosetData {
  std::vector<std::string> labels;
  BoolMatrix leq;
};

/// Family members in file order; duplicates are kept until validation.
struct CFSpaceData {
  GASpace ga;
  std::vector<Subset> family;
};

/// `pairs` index the families in file order.
struct ApproxRelData {
  CFSpaceData source;
  CFSpaceData target;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct Instance {
  InstanceKind kind = InstanceKind::poset;
  Meta meta;
  std::variant<PosetData, GASpace, CFSpaceData, ApproxRelData> payload;
  /// Top-level fields outside the schema, kept for display only.
  Json extra = Json::object();

  const PosetData& poset() const { return std::get<PosetData>(payload); }
  const GASpace& ga() const { return std::get<GASpace>(payload); }
  const CFSpaceData& cf() const { return std::get<CFSpaceData>(payload); }
  const ApproxRelData& rel() const { return std::get<ApproxRelData>(payload); }
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("ParseError", "line " + std::to_string(line) + ": " + message,
                   {{"line", std::to_string(line)}}),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SchemaError : public InputError {
 public:
  SchemaError(const std::string& field, const std::string& message)
      : InputError("SchemaError", field + ": " + message, {{"field", field}}), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// ---------------------------------------------------------------------------
// Reading

namespace detail {

inline const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

inline std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

inline std::vector<std::string> read_names(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of element names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string()) out.push_back(j[i].get<std::string>());
    else if (j[i].is_number_integer()) out.push_back(std::to_string(j[i].get<long long>()));
    else throw SchemaError(at(path, i), "element names must be strings or integers");
  }
  return out;
}

inline BoolMatrix read_matrix(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " rows");
  BoolMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw SchemaError(at(path, r), "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const Json& v = row[c];
      if (v.is_boolean()) m.set(r, c, v.get<bool>());
      else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) m.set(r, c, v.get<int>() == 1);
      else throw SchemaError(at(at(path, r), c), "expected a boolean");
    }
  }
  return m;
}

/// An element given either by index or by name.
inline std::size_t read_element(const Json& j, const FinUniverse& u, const std::string& path) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    const auto i = j.get<std::size_t>();
    if (i >= u.size()) throw SchemaError(path, "element index out of range");
    return i;
  }
  if (j.is_string()) {
    try {
      return u.index_of(j.get<std::string>());
    } catch (const InputError&) {
      throw SchemaError(path, "unknown element '" + j.get<std::string>() + "'");
    }
  }
  throw SchemaError(path, "expected an element index or name");
}

inline GASpace read_ga(const Json& j, const std::string& path) {
  FinUniverse u(read_names(require(j, "universe", path), join(path, "universe")));
  const bool has_rel = j.contains("rel");
  const bool has_pairs = j.contains("pairs");
  if (has_rel == has_pairs) throw SchemaError(join(path, "rel"), "give exactly one of rel or pairs");
  if (has_rel) return GASpace(u, read_matrix(j["rel"], u.size(), join(path, "rel")));
  const Json& ps = j["pairs"];
  const std::string pp = join(path, "pairs");
  if (!ps.is_array()) throw SchemaError(pp, "expected an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!ps[i].is_array() || ps[i].size() != 2) throw SchemaError(at(pp, i), "expected [x, y]");
    pairs.emplace_back(read_element(ps[i][0], u, at(at(pp, i), 0)),
                       read_element(ps[i][1], u, at(at(pp, i), 1)));
  }
  return GASpace::from_pairs(u, pairs);
}

inline CFSpaceData read_cf(const Json& j, const std::string& path) {
  CFSpaceData d;
  d.ga = read_ga(require(j, "ga", path), join(path, "ga"));
  const Json& fam = require(j, "family", path);
  const std::string fp = join(path, "family");
  if (!fam.is_array()) throw SchemaError(fp, "expected an array of subsets");
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!fam[i].is_array()) throw SchemaError(at(fp, i), "expected an array of elements");
    Subset s;
    for (std::size_t e = 0; e < fam[i].size(); ++e)
      s.insert(read_element(fam[i][e], d.ga.universe(), at(at(fp, i), e)));
    d.family.push_back(s);
  }
  return d;
}

inline PosetData read_poset(const Json& j) {
  PosetData d;
  d.labels = read_names(require(j, "elements", ""), "elements");
  d.leq = read_matrix(require(j, "leq", ""), d.labels.size(), "leq");
  return d;
}

inline std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace detail

inline InstanceKind parse_kind(const std::string& s) {
  for (auto k : {InstanceKind::poset, InstanceKind::ga_space, InstanceKind::cf_space,
                 InstanceKind::abstract_basis, InstanceKind::approx_rel})
    if (s == to_string(k)) return k;
  throw SchemaError("kind", "unknown kind '" + s + "'");
}

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "instance must be a JSON object");
  const Json& kind = detail::require(j, "kind", "");
  if (!kind.is_string()) throw SchemaError("kind", "expected a string");
  Instance inst;
  inst.kind = parse_kind(kind.get<std::string>());
  if (j.contains("meta")) {
    const Json& m = j["meta"];
    if (!m.is_object()) throw SchemaError("meta", "expected an object");
    if (m.contains("name")) {
      if (!m["name"].is_string()) throw SchemaError("meta.name", "expected a string");
      inst.meta.name = m["name"].get<std::string>();
    }
    if (m.contains("seed")) {
      if (!m["seed"].is_number_unsigned()) throw SchemaError("meta.seed", "expected an unsigned integer");
      inst.meta.seed = m["seed"].get<std::uint64_t>();
    }
    if (m.contains("notes")) {
      if (!m["notes"].is_string()) throw SchemaError("meta.notes", "expected a string");
      inst.meta.notes = m["notes"].get<std::string>();
    }
  }
  switch (inst.kind) {
    case InstanceKind::poset: inst.payload = detail::read_poset(j); break;
    case InstanceKind::ga_space:
    case InstanceKind::abstract_basis: inst.payload = detail::read_ga(j, ""); break;
    case InstanceKind::cf_space: inst.payload = detail::read_cf(j, ""); break;
    case InstanceKind::approx_rel: {
      ApproxRelData d;
      d.source = detail::read_cf(detail::require(j, "source", ""), "source");
      d.target = detail::read_cf(detail::require(j, "target", ""), "target");
      const Json& ps = detail::require(j, "pairs", "");
      if (!ps.is_array()) throw SchemaError("pairs", "expected an array of pairs");
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string p = detail::at("pairs", i);
        if (!ps[i].is_array() || ps[i].size() != 2 || !ps[i][0].is_number_unsigned() ||
            !ps[i][1].is_number_unsigned())
          throw SchemaError(p, "expected [family index, family index]");
        const auto f = ps[i][0].get<std::size_t>();
        const auto g = ps[i][1].get<std::size_t>();
        if (f >= d.source.family.size() || g >= d.target.family.size())
          throw SchemaError(p, "family index out of range");
        d.pairs.emplace_back(f, g);
      }
      inst.payload = std::move(d);
      break;
    }
  }
  static const std::vector<std::string> known{"kind", "meta", "elements", "leq", "universe", "rel",
                                              "pairs", "ga", "family", "source", "target"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) inst.extra[it.key()] = it.value();
  return inst;
}

inline Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(detail::line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  return instance_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("FileNotReadable", "cannot read " + path, {{"path", path}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

// ---------------------------------------------------------------------------
// Validation into library objects

inline FinPoset to_poset(const Instance& inst) {
  return FinPoset::validate(inst.poset().labels, inst.poset().leq);
}

inline CFSpace to_cf_space(const CFSpaceData& d, Engine engine = Engine::reduced, const Guards& g = {}) {
  return validate_cf_space(d.ga, d.family, engine, g);
}

/// Validates both spaces, then the relation after mapping file indices to
/// canonical family indices.
inline ApproxRel to_approx_rel(const ApproxRelData& d, const Guards& g = {}) {
  auto src = share(to_cf_space(d.source, Engine::reduced, g));
  auto tgt = share(to_cf_space(d.target, Engine::reduced, g));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [f, gi] : d.pairs)
    pairs.emplace_back(*src->index_of(d.source.family[f]), *tgt->index_of(d.target.family[gi]));
  return validate_approx_rel(src, tgt, pairs);
}

// ---------------------------------------------------------------------------
// Canonical writing

namespace detail {

/// Positions of the names in sorted order: perm[old] = new.
inline std::vector<std::size_t> sorted_positions(const std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::size_t> perm(names.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  return perm;
}

inline Subset permute(Subset s, const std::vector<std::size_t>& perm) {
  Subset out;
  s.for_each([&](std::size_t i) { out.insert(perm[i]); });
  return out;
}

inline std::vector<std::string> permuted_names(const std::vector<std::string>& names,
                                               const std::vector<std::size_t>& perm) {
  std::vector<std::string> out(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) out[perm[i]] = names[i];
  return out;
}

inline Json matrix_json(const std::vector<Subset>& rows, std::size_t n) {
  Json m = Json::array();
  for (std::size_t r = 0; r < n; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(rows[r].contains(c));
    m.push_back(row);
  }
  return m;
}

/// GA payload with sorted names; returns the permutation used.
inline Json ga_json(const GASpace& s, std::vector<std::size_t>* perm_out = nullptr) {
  const auto perm = sorted_positions(s.universe().names());
  std::vector<Subset> rows(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) rows[perm[x]] = permute(s.successors(x), perm);
  Json j;
  j["universe"] = permuted_names(s.universe().names(), perm);
  j["rel"] = matrix_json(rows, s.size());
  if (perm_out) *perm_out = perm;
  return j;
}

inline Json subset_json(Subset s, const std::vector<std::string>& names) {
  Json a = Json::array();
  s.for_each([&](std::size_t i) { a.push_back(names[i]); });
  return a;
}

/// Family after renaming, sorted and deduplicated.
inline std::vector<Subset> canonical_renamed(const std::vector<Subset>& family,
                                             const std::vector<std::size_t>& perm) {
  std::vector<Subset> out;
  for (auto f : family) out.push_back(permute(f, perm));
  return canonical_family(std::move(out));
}

inline Json cf_json(const GASpace& ga, const std::vector<Subset>& family,
                    std::vector<Subset>* renamed_out = nullptr, std::vector<std::size_t>* perm_out = nullptr) {
  std::vector<std::size_t> perm;
  Json j;
  j["ga"] = ga_json(ga, &perm);
  const auto names = permuted_names(ga.universe().names(), perm);
  const auto fam = canonical_renamed(family, perm);
  j["family"] = Json::array();
  for (auto f : fam) j["family"].push_back(subset_json(f, names));
  if (renamed_out) *renamed_out = fam;
  if (perm_out) *perm_out = perm;
  return j;
}

inline bool is_scalar_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& v : j)
    if (v.is_structured()) return false;
  return true;
}

/// Two-space indentation with arrays of scalars kept on one line.
inline void write_json(std::ostream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << inner << Json(it.key()).dump() << ": ";
      write_json(os, it.value(), depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (j.is_array() && !j.empty() && !is_scalar_array(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << inner;
      write_json(os, j[i], depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else if (is_scalar_array(j)) {
    os << "[";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace detail

inline std::string dump_json(const Json& j) {
  std::ostringstream os;
  detail::write_json(os, j, 0);
  os << "\n";
  return os.str();
}

inline Json meta_json(const Meta& m) {
  Json j = Json::object();
  if (!m.name.empty()) j["name"] = m.name;
  if (m.seed) j["seed"] = *m.seed;
  if (!m.notes.empty()) j["notes"] = m.notes;
  return j;
}

/// Canonical JSON object for an instance: element names sorted, families
/// sorted and deduplicated, relations as matrices, pairs sorted.
inline Json instance_to_json(const Instance& inst) {
  Json j;
  switch (inst.kind) {
    case InstanceKind::poset: {
      const auto& d = inst.poset();
      const auto perm = detail::sorted_positions(d.labels);
      std::vector<Subset> rows(d.labels.size());
      for (std::size_t x = 0; x < d.labels.size(); ++x)
        for (std::size_t y = 0; y < d.labels.size(); ++y)
          if (d.leq(x, y)) rows[perm[x]].insert(perm[y]);
      j["elements"] = detail::permuted_names(d.labels, perm);
      j["leq"] = detail::matrix_json(rows, d.labels.size());
      break;
    }
    case InstanceKind::ga_space:
    case InstanceKind::abstract_basis: j = detail::ga_json(inst.ga()); break;
    case InstanceKind::cf_space: j = detail::cf_json(inst.cf().ga, inst.cf().family); break;
    case InstanceKind::approx_rel: {
      const auto& d = inst.rel();
      std::vector<Subset> fam1, fam2;
      std::vector<std::size_t> perm1, perm2;
      j["source"] = detail::cf_json(d.source.ga, d.source.family, &fam1, &perm1);
      j["target"] = detail::cf_json(d.target.ga, d.target.family, &fam2, &perm2);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      auto idx = [](const std::vector<Subset>& fam, Subset s) {
        return static_cast<std::size_t>(std::lower_bound(fam.begin(), fam.end(), s) - fam.begin());
      };
      for (auto [f, g] : d.pairs)
        pairs.emplace_back(idx(fam1, detail::permute(d.source.family[f], perm1)),
                           idx(fam2, detail::permute(d.target.family[g], perm2)));
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      j["pairs"] = Json::array();
      for (auto [f, g] : pairs) j["pairs"].push_back(Json::array({f, g}));
      break;
    }
  }
  j["kind"] = to_string(inst.kind);
  if (!inst.meta.empty()) j["meta"] = meta_json(inst.meta);
  return j;
}

inline std::string export_json(const Instance& inst) { return dump_json(instance_to_json(inst)); }

// ---------------------------------------------------------------------------
// Building instances from library objects

inline Instance make_instance(const FinPoset& p, Meta meta = {}) {
  return Instance{InstanceKind::poset, std::move(meta), PosetData{p.labels(), p.leq_matrix()}, Json::object()};
}

inline Instance make_instance(const GASpace& s, Meta meta = {}, bool abstract_basis = false) {
  return Instance{abstract_basis ? InstanceKind::abstract_basis : InstanceKind::ga_space, std::move(meta), s,
                  Json::object()};
}

inline Instance make_instance(const CFSpace& s, Meta meta = {}) {
  return Instance{InstanceKind::cf_space, std::move(meta), CFSpaceData{s.ga(), s.family()}, Json::object()};
}

inline Instance make_instance(const ApproxRel& r, Meta meta = {}) {
  ApproxRelData d{CFSpaceData{r.source()->ga(), r.source()->family()},
                  CFSpaceData{r.target()->ga(), r.target()->family()}, r.pairs()};
  return Instance{InstanceKind::approx_rel, std::move(meta), std::move(d), Json::object()};
}

}  // namespace cfkit
