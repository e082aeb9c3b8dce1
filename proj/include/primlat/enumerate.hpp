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

#include <map>
#include <string>
#include <vector>

#include "primlat/classify.hpp"
#include "primlat/isomorphism.hpp"
#include "primlat/lattice.hpp"

namespace primlat {

inline constexpr std::size_t kMaxEnumerationSize = 8;

/// Labels for a lattice listed bottom first: "0", "a", "b", ..., "1".
inline std::vector<std::string> census_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) out.push_back("0");
    else if (i + 1 == n) out.push_back("1");
    else out.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  }
  return out;
}

/// One representative per isomorphism class of lattices with n elements,
/// ordered by canonical code and relabelled in canonical order.
inline std::vector<FiniteLattice> enumerate_lattices(std::size_t n) {
  if (n > kMaxEnumerationSize)
    throw LimitExceeded("lattice enumeration is limited to " +
                        std::to_string(kMaxEnumerationSize) + " elements");
  if (n == 0) return {*FiniteLattice::from_poset(FinitePoset{})};
  if (n == 1) {
    Relation r(1);
    r.set(0, 0);
    return {*FiniteLattice::from_poset(FinitePoset::from_order({"0"}, r))};
  }
  // Bottom is element 0, top is element n-1; the middle elements carry a
  // naturally labelled strict order (i below j only when i < j), which
  // reaches every isomorphism class.
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);

  std::map<std::string, FiniteLattice> classes;
  const std::size_t total = std::size_t{1} << slots.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    Relation r(n);
    for (Element x = 0; x < n; ++x) {
      r.set(x, x);
      r.set(0, x);
      r.set(x, n - 1);
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) r.set(slots[s].first + 1, slots[s].second + 1);
    bool transitive = true;
    for (Element x = 1; x + 1 < n && transitive; ++x)
      for (Element y = x + 1; y + 1 < n && transitive; ++y)
        if (r(x, y))
          for (Element z = y + 1; z + 1 < n; ++z)
            if (r(y, z) && !r(x, z)) {
              transitive = false;
              break;
            }
    if (!transitive) continue;
    auto poset = FinitePoset::from_order(census_labels(n), r);
    auto lat = FiniteLattice::from_poset(poset);
    if (!lat) continue;
    auto cf = canonical_form(poset);
    if (classes.count(cf.code)) continue;
    Relation canon(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (poset.leq(cf.sequence[i], cf.sequence[j])) canon.set(i, j);
    classes.emplace(cf.code,
                    *FiniteLattice::from_poset(FinitePoset::from_order(census_labels(n), canon)));
  }
  std::vector<FiniteLattice> out;
  out.reserve(classes.size());
  for (auto& [code, l] : classes) out.push_back(std::move(l));
  return out;
}

struct LatticeCensus {
  std::size_t lattices = 0;
  std::size_t modular = 0;
  std::size_t distributive = 0;
};

inline LatticeCensus census(const std::vector<FiniteLattice>& ls) {
  LatticeCensus c;
  for (const auto& l : ls) {
    auto r = classify(l);
    ++c.lattices;
    c.modular += r.modular ? 1 : 0;
    c.distributive += r.distributive ? 1 : 0;
  }
  return c;
}

}  // namespace primlat
