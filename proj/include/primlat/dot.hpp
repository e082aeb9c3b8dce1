//  Copyright 2026 The primlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <ostream>
#include <string>

#include "primlat/poset.hpp"

namespace primlat {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Hasse diagram in DOT: greater elements drawn higher, cover edges only.
inline void write_hasse_dot(std::ostream& out, const FinitePoset& p, const std::string& name = "hasse") {
  out << "digraph " << dot_quote(name.empty() ? "hasse" : name) << " {\n";
  out << "  rankdir=BT;\n  edge [dir=none];\n";
  for (Element x = 0; x < p.size(); ++x) out << "  " << dot_quote(p.label(x)) << ";\n";
  for (auto [lo, hi] : p.cover_pairs())
    out << "  " << dot_quote(p.label(lo)) << " -> " << dot_quote(p.label(hi)) << ";\n";
  out << "}\n";
}

}  // namespace primlat
