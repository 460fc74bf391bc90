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
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cfkit/error.hpp"

namespace cfkit {

inline constexpr std::size_t kMaxUniverse = 64;

/// A subset of a finite carrier {0, ..., n-1}, n <= 64, stored as a bitmask.
///
/// Subsets are ordered by their mask value (colexicographic on members). This
/// is the canonical order used for families, listings and golden files.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}
  Subset(std::initializer_list<std::size_t> members) {
    for (auto i : members) insert(i);
  }

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset singleton(std::size_t i) { return Subset(std::uint64_t{1} << i); }
  static Subset of(std::span<const std::size_t> members) {
    Subset s;
    for (auto i : members) s.insert(i);
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains(std::size_t i) const { return i < 64 && ((mask_ >> i) & 1U); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Subset other) const { return (mask_ & other.mask_) != 0; }
  constexpr bool fits(std::size_t n) const { return subset_of(full(n)); }

  void insert(std::size_t i) { mask_ |= std::uint64_t{1} << i; }
  void erase(std::size_t i) { mask_ &= ~(std::uint64_t{1} << i); }

  constexpr Subset complement(std::size_t n) const { return Subset(~mask_ & full(n).mask_); }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(mask_)); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      f(static_cast<std::size_t>(std::countr_zero(m)));
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.mask_ | b.mask_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.mask_ & b.mask_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.mask_ & ~b.mask_); }
  Subset& operator|=(Subset o) { mask_ |= o.mask_; return *this; }
  Subset& operator&=(Subset o) { mask_ &= o.mask_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

/// Calls `f(sub)` for every subset of `s`, including the empty set and `s`,
/// in increasing mask order.
template <typename F>
void for_each_subset(Subset s, F&& f) {
  const std::uint64_t m = s.mask();
  std::uint64_t sub = 0;
  while (true) {
    f(Subset(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

/// Like for_each_subset, but stops as soon as `f` returns true. Returns
/// whether it stopped early.
template <typename F>
bool any_subset(Subset s, F&& f) {
  const std::uint64_t m = s.mask();
  std::uint64_t sub = 0;
  while (true) {
    if (f(Subset(sub))) return true;
    if (sub == m) return false;
    sub = (sub - m) & m;
  }
}

/// Sorts and deduplicates a family in canonical order.
inline std::vector<Subset> canonical_family(std::vector<Subset> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

/// Indexed finite carrier with distinct labels.
class FinUniverse {
 public:
  FinUniverse() = default;

  explicit FinUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxUniverse)
      throw InputError("UniverseTooLarge",
                       "universe has " + std::to_string(names_.size()) +
                           " elements; at most 64 are supported",
                       {{"size", std::to_string(names_.size())}});
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw InputError("DuplicateElement", "duplicate element label '" + names_[i] + "'",
                         {{"element", names_[i]}});
    }
  }

  /// Universe labelled "1", ..., "n".
  static FinUniverse numbered(std::size_t n, std::size_t first = 1) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(first + i));
    return FinUniverse(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  Subset all() const { return Subset::full(size()); }

  std::size_t index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw InputError("UnknownElement", "unknown element '" + name + "'", {{"element", name}});
    return it->second;
  }

  void check_element(std::size_t i) const {
    if (i >= size())
      throw InputError("UnknownElement",
                       "element index " + std::to_string(i) + " outside universe of size " +
                           std::to_string(size()),
                       {{"element", std::to_string(i)}});
  }

  void check_subset(Subset s) const {
    if (!s.fits(size()))
      throw InputError("UniverseMismatch",
                       "subset has members outside a universe of size " + std::to_string(size()),
                       {{"mask", std::to_string(s.mask())}});
  }

  /// "{a,b}" using element labels.
  std::string format(Subset s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
      if (!first) out += ',';
      out += i < size() ? names_[i] : std::to_string(i);
      first = false;
    });
    return out + "}";
  }

  friend bool operator==(const FinUniverse& a, const FinUniverse& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// "{0,2}" using raw indices; for messages about unlabelled carriers.
inline std::string format_indices(Subset s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

/// Dense row-major boolean matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v = true) { cells_[r * cols_ + c] = v ? 1 : 0; }

  std::size_t count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

}  // namespace cfkit
