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

#include <gtest/gtest.h>


#include "fixtures.hpp"

namespace primlat {
namespace {

// Lattices on n elements up to isomorphism, counted with a pairwise
// isomorphism search instead of canonical codes. Every lattice has a
// linear extension with the bottom first and the top last, so it suffices
// to try all transitive relations among the middle elements that respect
// index order.
std::size_t brute_lattice_count(std::size_t n) {
  if (n <= 2) return 1;
  const std::size_t m = n - 2;
  std::vector<std::pair<Element, Element>> slots;
  for (Element i = 1; i <= m; ++i)
    for (Element j = i + 1; j <= m; ++j) slots.emplace_back(i, j);
  std::vector<FinitePoset> reps;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Relation r(n);
    for (Element x = 0; x < n; ++x) {
      r.set(x, x);
      r.set(0, x);
      r.set(x, n - 1);
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1u) r.set(slots[s].first, slots[s].second);
    if (!(reflexive_transitive_closure(r) == r)) continue;  // only transitive relations
    auto p = FinitePoset::from_order(labels, r);
    if (!FiniteLattice::from_poset(p)) continue;
    bool fresh = true;
    for (const auto& q : reps) fresh = fresh && !find_isomorphism(p, q);
    if (fresh) reps.push_back(p);
  }
  return reps.size();
}

TEST(Enumerate, KnownCounts) {
  const std::size_t lattices[] = {1, 1, 1, 1, 2, 5, 15, 53, 222};
  const std::size_t modular[] = {1, 1, 1, 1, 2, 4, 8, 16, 34};
  const std::size_t distributive[] = {1, 1, 1, 1, 2, 3, 5, 8, 15};
  for (std::size_t n = 0; n <= kMaxEnumerationSize; ++n) {
    auto c = census(enumerate_lattices(n));
    EXPECT_EQ(c.lattices, lattices[n]) << "n = " << n;
    EXPECT_EQ(c.modular, modular[n]) << "n = " << n;
    EXPECT_EQ(c.distributive, distributive[n]) << "n = " << n;
  }
}

TEST(Enumerate, MatchesIndependentCount) {
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_lattices(n).size(), brute_lattice_count(n)) << n;
}

TEST(Enumerate, ResultsArePairwiseNonIsomorphicLattices) {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto ls = enumerate_lattices(n);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      ASSERT_EQ(ls[i].size(), n);
      for (std::size_t j = i + 1; j < ls.size(); ++j) ASSERT_FALSE(is_isomorphic(ls[i].poset(), ls[j].poset()));
    }
  }
}

TEST(Enumerate, Deterministic) {
  auto a = enumerate_lattices(6), b = enumerate_lattices(6);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].poset().order(), b[i].poset().order());
}

TEST(Enumerate, SizeCap) { EXPECT_THROW(enumerate_lattices(kMaxEnumerationSize + 1), LimitExceeded); }

}  // namespace
}  // namespace primlat
