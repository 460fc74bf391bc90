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

#include <sstream>
#include <string>

#include "cfkit/poset.hpp"

namespace cfkit {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Hasse diagram as a Graphviz digraph, covering edges drawn lower -> upper.
inline std::string hasse_dot(const FinPoset& p, const std::string& name = "hasse") {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    os << "  n" << x << " [label=" << dot_quote(p.label(x)) << "];\n";
  for (auto [lo, hi] : hasse_edges(p)) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cfkit
