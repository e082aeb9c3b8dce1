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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primlat/lattice.hpp"

namespace primlat {

/// x M y: for every a <= y, (a v x) ^ y = a v (x ^ y).
inline bool modular_pair(const FiniteLattice& l, Element x, Element y) {
  for (Element a = 0; a < l.size(); ++a) {
    if (!l.leq(a, y)) continue;
    if (l.meet(l.join(a, x), y) != l.join(a, l.meet(x, y))) return false;
  }
  return true;
}

/// x ^ (y v z) = (x ^ y) v (x ^ z).
inline bool distributive_triple(const FiniteLattice& l, Element x, Element y, Element z) {
  return l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
}

/// Pentagon sublattice as {bottom, a, b, p, top} with a < b and p beside both.
inline std::optional<std::array<Element, 5>> find_pentagon(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!l.lt(a, b)) continue;
      for (Element p = 0; p < n; ++p) {
        if (l.poset().comparable(p, a) || l.poset().comparable(p, b)) continue;
        Element o = l.meet(a, p);
        Element i = l.join(b, p);
        if (l.meet(b, p) == o && l.join(a, p) == i) return std::array<Element, 5>{o, a, b, p, i};
      }
    }
  return std::nullopt;
}

/// Diamond sublattice as {bottom, p, q, r, top}.
inline std::optional<std::array<Element, 5>> find_diamond(const FiniteLattice& l) {
  const std::size_t n = l.size();
  const auto& P = l.poset();
  for (Element p = 0; p < n; ++p)
    for (Element q = p + 1; q < n; ++q) {
      if (P.comparable(p, q)) continue;
      Element o = l.meet(p, q);
      Element i = l.join(p, q);
      for (Element r = q + 1; r < n; ++r) {
        if (P.comparable(p, r) || P.comparable(q, r)) continue;
        if (l.meet(p, r) == o && l.meet(q, r) == o && l.join(p, r) == i && l.join(q, r) == i)
          return std::array<Element, 5>{o, p, q, r, i};
      }
    }
  return std::nullopt;
}

enum class Complementation { none, unique, multiple };

inline const char* to_string(Complementation c) {
  switch (c) {
    case Complementation::none: return "non-complemented";
    case Complementation::unique: return "uniquely-complemented";
    case Complementation::multiple: return "multiply-complemented";
  }
  return "?";
}

/// Structural properties of one lattice together with witnesses.
struct PropertyReport {
  bool bounded = false;
  bool modular = false;
  bool distributive = false;
  bool complemented = false;
  Complementation complementation = Complementation::none;
  bool boolean = false;
  bool atomic = false;
  std::size_t width = 0;
  std::size_t length = 0;
  std::vector<std::vector<Element>> chain_partition;
  std::vector<std::size_t> heights;
  std::optional<std::array<Element, 5>> pentagon;
  std::optional<std::array<Element, 5>> diamond;
  std::optional<std::pair<Element, Element>> non_modular_pair;
  std::optional<std::array<Element, 3>> non_distributive_triple;
  std::optional<Element> uncomplemented;
};

inline bool is_atomic(const FiniteLattice& l) {
  if (l.empty()) return true;
  auto at = atoms(l);
  for (Element x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::vector<Element> below;
    for (Element a : at)
      if (l.leq(a, x)) below.push_back(a);
    if (l.join_all(below) != x) return false;
  }
  return true;
}

/// Classifies a lattice. The definitional checks (modular pairs, distributive
/// triples) are cross-checked against the forbidden-sublattice searches.
inline PropertyReport classify(const FiniteLattice& l) {
  PropertyReport r;
  const std::size_t n = l.size();
  r.bounded = n > 0;
  r.modular = true;
  for (Element x = 0; x < n && r.modular; ++x)
    for (Element y = 0; y < n && r.modular; ++y)
      if (!modular_pair(l, x, y)) {
        r.modular = false;
        r.non_modular_pair = std::pair{x, y};
      }
  r.distributive = true;
  for (Element x = 0; x < n && r.distributive; ++x)
    for (Element y = 0; y < n && r.distributive; ++y)
      for (Element z = 0; z < n && r.distributive; ++z)
        if (!distributive_triple(l, x, y, z)) {
          r.distributive = false;
          r.non_distributive_triple = std::array<Element, 3>{x, y, z};
        }
  r.pentagon = find_pentagon(l);
  r.diamond = find_diamond(l);
  if (r.modular == r.pentagon.has_value())
    throw std::logic_error("modularity disagrees with the pentagon search");
  if (r.distributive == (r.pentagon.has_value() || r.diamond.has_value()))
    throw std::logic_error("distributivity disagrees with the forbidden-sublattice search");

  r.complemented = r.bounded;
  bool multiple = false;
  for (Element x = 0; x < n && r.complemented; ++x) {
    auto c = complements_of(l, x);
    if (c.empty()) {
      r.complemented = false;
      r.uncomplemented = x;
    }
    if (c.size() > 1) multiple = true;
  }
  r.complementation = !r.complemented ? Complementation::none
                      : multiple      ? Complementation::multiple
                                      : Complementation::unique;
  r.boolean = r.bounded && r.distributive && r.complemented;
  r.atomic = is_atomic(l);
  r.chain_partition = min_chain_partition(l.poset());
  r.width = r.chain_partition.size();
  r.length = length(l.poset());
  r.heights = heights(l);
  return r;
}

}  // namespace primlat
