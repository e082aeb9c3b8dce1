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

#include <algorithm>
#include <bit>

#include "fixtures.hpp"

namespace primlat {
namespace {

using testing::diamond;
using testing::pentagon;
using testing::powerset;

// Five-element subsets closed under join and meet that form a pentagon or
// diamond, found without the library's witness searches.
struct Forbidden {
  bool pentagon = false;
  bool diamond = false;
};

Forbidden brute_forbidden(const FiniteLattice& l) {
  static const auto n5 = pentagon().poset();
  static const auto m3 = diamond().poset();
  Forbidden f;
  const std::size_t n = l.size();
  if (n < 5) return f;
  std::vector<Element> pick(5);
  auto walk = [&](auto&& self, std::size_t k, Element from) -> void {
    if (k == 5) {
      for (Element a : pick)
        for (Element b : pick)
          if (std::find(pick.begin(), pick.end(), l.join(a, b)) == pick.end() ||
              std::find(pick.begin(), pick.end(), l.meet(a, b)) == pick.end())
            return;
      auto sub = l.poset().induced(pick);
      f.pentagon = f.pentagon || is_isomorphic(sub, n5);
      f.diamond = f.diamond || is_isomorphic(sub, m3);
      return;
    }
    for (Element e = from; e < n; ++e) {
      pick[k] = e;
      self(self, k + 1, e + 1);
    }
  };
  walk(walk, 0, 0);
  return f;
}

TEST(Classify, Pentagon) {
  auto l = pentagon();
  auto r = classify(l);
  EXPECT_FALSE(r.modular);
  EXPECT_FALSE(r.distributive);
  EXPECT_TRUE(r.complemented);
  EXPECT_EQ(r.complementation, Complementation::multiple);
  EXPECT_FALSE(r.boolean);
  ASSERT_TRUE(r.pentagon.has_value());
  ASSERT_TRUE(r.non_modular_pair.has_value());
  EXPECT_FALSE(modular_pair(l, r.non_modular_pair->first, r.non_modular_pair->second));
  // p complements both a and b.
  auto cp = complements_of(l, l.index_of("p"));
  EXPECT_EQ(cp.size(), 2u);
  const auto& w = *r.pentagon;
  EXPECT_TRUE(l.lt(w[1], w[2]));
  EXPECT_EQ(l.meet(w[1], w[3]), w[0]);
  EXPECT_EQ(l.join(w[2], w[3]), w[4]);
}

TEST(Classify, Diamond) {
  auto r = classify(diamond());
  EXPECT_TRUE(r.modular);
  EXPECT_FALSE(r.distributive);
  EXPECT_TRUE(r.diamond.has_value());
  EXPECT_FALSE(r.pentagon.has_value());
  EXPECT_EQ(r.complementation, Complementation::multiple);
  EXPECT_TRUE(r.atomic);
}

TEST(Classify, EightElementExample) {
  auto l = testing::lattice_from(
      {"0", "a", "b", "c", "p", "q", "r", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "p"}, {"b", "p"}, {"c", "p"}, {"c", "q"},
       {"c", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
  auto r = classify(l);
  EXPECT_EQ(r.width, 4u);
  EXPECT_EQ(r.length, 3u);
  EXPECT_EQ(r.chain_partition.size(), 4u);
  EXPECT_EQ(r.heights[l.top()], 3u);
}

TEST(Classify, PowersetIsBoolean) {
  auto l = powerset(3);
  auto r = classify(l);
  EXPECT_TRUE(r.boolean);
  EXPECT_TRUE(r.distributive);
  EXPECT_EQ(r.complementation, Complementation::unique);
  EXPECT_EQ(r.heights[l.top()], 3u);
  EXPECT_EQ(r.width, 3u);
}

TEST(Classify, DistributiveTriple) {
  auto b = powerset(3);
  for (Element x = 0; x < b.size(); ++x)
    for (Element y = 0; y < b.size(); ++y)
      for (Element z = 0; z < b.size(); ++z) ASSERT_TRUE(distributive_triple(b, x, y, z));
  auto m = diamond();
  EXPECT_FALSE(distributive_triple(m, m.index_of("p"), m.index_of("q"), m.index_of("r")));
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& l : enumerate_lattices(n))
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) ASSERT_TRUE(distributive_triple(l, x, y, y));
}

TEST(Classify, ForbiddenSublatticesAgreeWithDefinitions) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      auto r = classify(l);
      auto f = brute_forbidden(l);
      ASSERT_EQ(r.modular, !f.pentagon);
      ASSERT_EQ(r.distributive, !f.pentagon && !f.diamond);
      if (r.distributive) {
        ASSERT_TRUE(r.modular);
      }
    }
}

TEST(Classify, BooleanIsBoundedDistributiveComplemented) {
  std::size_t booleans = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      auto r = classify(l);
      ASSERT_EQ(r.boolean, r.bounded && r.distributive && r.complemented);
      if (r.boolean) {
        ++booleans;
        ASSERT_TRUE(std::has_single_bit(n));
        ASSERT_TRUE(is_isomorphic(l.poset(), powerset(static_cast<unsigned>(std::countr_zero(n))).poset()));
      }
    }
  EXPECT_EQ(booleans, 4u);  // sizes 1, 2, 4, 8
}

TEST(Classify, UniqueComplementsWithoutBooleanDoNotOccurInSmallLattices) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      auto r = classify(l);
      if (r.distributive && r.complemented) {
        ASSERT_EQ(r.complementation, Complementation::unique);
      }
      if (r.complementation == Complementation::unique) {
        ASSERT_TRUE(r.boolean) << "size " << n;
      }
    }
}

TEST(Classify, AtomicMatchesJoinOfAtomsBelow) {
  EXPECT_FALSE(classify(pentagon()).atomic);
  EXPECT_TRUE(classify(powerset(3)).atomic);
  EXPECT_FALSE(classify(chain({"0", "m", "1"})).atomic);
}

}  // namespace
}  // namespace primlat
