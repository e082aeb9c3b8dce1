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

using enum NegationClass;

TEST(Negation, HexagonOrthoMap) {
  auto o = hexagon();
  auto c = classify_negation(o.lattice(), o.perp_map());
  for (auto k : {subminimal, minimal, intuitionistic, fuzzy, de_morgan, kleene, ortho}) EXPECT_TRUE(c.contains(k)) << to_string(k);
  EXPECT_FALSE(c.contains(orthomodular));
}

TEST(Negation, ThreeChainKleene) {
  auto l = chain({"0", "m", "1"});
  auto neg = negation_from_labels(l, {{"0", "1"}, {"m", "m"}, {"1", "0"}});
  EXPECT_EQ(classify_negation(l, neg), negation_classes({subminimal, minimal, fuzzy, de_morgan, kleene}));
}

TEST(Negation, ConstantOne) {
  auto l = chain({"0", "m", "1"});
  auto neg = negation_from_labels(l, {{"0", "1"}, {"m", "1"}, {"1", "1"}});
  EXPECT_EQ(classify_negation(l, neg), negation_classes({subminimal, minimal}));
}

TEST(Negation, PowersetComplementIsOrthomodular) {
  auto o = testing::boolean_ortho(3);
  auto c = classify_negation(o.lattice(), o.perp_map());
  for (auto k : kAllNegationClasses) EXPECT_TRUE(c.contains(k)) << to_string(k);
}

TEST(Negation, PseudocomplementOnAChainIsIntuitionisticNotDeMorgan) {
  // Pseudocomplement on 0 < m < 1: 0 -> 1, m -> 0, 1 -> 0.
  auto l = chain({"0", "m", "1"});
  auto neg = negation_from_labels(l, {{"0", "1"}, {"m", "0"}, {"1", "0"}});
  EXPECT_EQ(classify_negation(l, neg), negation_classes({subminimal, minimal, intuitionistic, fuzzy}));
}

TEST(Negation, NotAntitoneIsNoNegation) {
  auto l = chain({"0", "m", "1"});
  auto neg = negation_from_labels(l, {{"0", "0"}, {"m", "m"}, {"1", "1"}});
  EXPECT_TRUE(classify_negation(l, neg).empty());
}

TEST(Negation, InputErrors) {
  auto l = chain({"0", "1"});
  EXPECT_THROW(negation_from_labels(l, {{"0", "1"}}), PreconditionError);
  EXPECT_THROW(negation_from_labels(l, {{"0", "1"}, {"0", "0"}, {"1", "0"}}), PreconditionError);
  EXPECT_THROW(classify_negation(l, {1}), PreconditionError);
  EXPECT_THROW(classify_negation(l, {1, 7}), PreconditionError);
}

// Every antitone map on every lattice up to 5 elements: the class set is
// closed under the implications between classes.
TEST(Negation, ClassImplicationsOnAllMaps) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      std::vector<Element> neg(n, 0);
      while (true) {
        auto c = classify_negation(l, neg);
        if (c.contains(minimal)) {
          EXPECT_TRUE(c.contains(subminimal));
        }
        if (c.contains(intuitionistic) || c.contains(de_morgan)) {
          EXPECT_TRUE(c.contains(minimal));
        }
        if (c.contains(kleene)) {
          EXPECT_TRUE(c.contains(de_morgan));
        }
        if (c.contains(ortho)) {
          EXPECT_TRUE(c.contains(de_morgan) && c.contains(intuitionistic));
        }
        if (c.contains(orthomodular)) {
          EXPECT_TRUE(c.contains(ortho));
        }
        if (c.contains(ortho)) {
          EXPECT_FALSE(check_orthocomplement(l, neg).has_value());
        }
        std::size_t k = 0;
        while (k < n && ++neg[k] == n) neg[k++] = 0;
        if (k == n) break;
      }
    }
}

}  // namespace
}  // namespace primlat
