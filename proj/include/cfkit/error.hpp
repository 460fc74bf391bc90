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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfkit {

/// Ordered (key, value) pairs describing the counterexample behind an error.
using Witness = std::vector<std::pair<std::string, std::string>>;

/// Base of every error raised by the library. `code()` is a stable
/// machine-readable identifier such as "NotTransitive" or "CFAxiomFailed".
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message, Witness witness = {})
      : std::runtime_error(std::move(message)),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const Witness& witness() const noexcept { return witness_; }

  /// Value recorded under `key`, or an empty string.
  std::string witness_value(const std::string& key) const {
    for (const auto& [k, v] : witness_)
      if (k == key) return v;
    return {};
  }

 private:
  std::string code_;
  Witness witness_;
};

/// Input data violates a definition (order axioms, CF axiom, relation axioms).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: unknown element, mismatched universe, bad JSON shape.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exponential routine was asked to run above its configured size guard.
class GuardError : public Error {
 public:
  GuardError(std::string what, std::size_t size, std::size_t limit)
      : Error("SizeGuardExceeded",
              what + ": size " + std::to_string(size) + " exceeds guard " +
                  std::to_string(limit),
              {{"operation", what},
               {"size", std::to_string(size)},
               {"limit", std::to_string(limit)}}) {}
};

/// A post-condition that follows from a proven theorem did not hold.
/// Seeing one of these always means a bug in this library.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cfkit
