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

std::vector<Mask> all_subsets(unsigned n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) out.push_back(m);
  return out;
}

const auto subset = [](Mask a, Mask b) { return (a & ~b) == 0; };

TEST(DPoset, PowersetWithSetDifference) {
  for (unsigned n = 0; n <= 4; ++n) {
    auto r = dposet_check(all_subsets(n), subset, [](Mask y, Mask x) { return y & ~x; });
    EXPECT_TRUE(r.passed) << n << " " << r.failed_law;
  }
}

TEST(DPoset, MinuendAsDifferenceFails) {
  auto r = dposet_check(all_subsets(3), subset, [](Mask y, Mask) { return y; });
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.failed_law, "double difference: y\\(y\\x) = x");
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0, 1}));
}

TEST(DPoset, SymmetricDifferenceIsAlsoADifference) {
  // On comparable pairs y ^ x equals y \ x.
  EXPECT_TRUE(dposet_check(all_subsets(3), subset, [](Mask y, Mask x) { return y ^ x; }).passed);
}

TEST(DPoset, ConstantDifferenceBreaksTheFirstAxiom) {
  auto r = dposet_check(all_subsets(2), subset, [](Mask, Mask) { return Mask{3}; });
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.failed_law, "difference below minuend: y\\x <= y");
}

TEST(DPoset, IntegersWithSubtraction) {
  std::vector<int> xs{0, 1, 2, 3, 4, 5};
  auto r = dposet_check(xs, [](int a, int b) { return a <= b; }, [](int y, int x) { return y - x; });
  EXPECT_TRUE(r.passed);
}

TEST(DPoset, PrimorialChain) {
  for (unsigned n = 2; n <= 5; ++n) {
    auto p = generate_primorial(n);
    EXPECT_TRUE(chain_dposet_check(p).passed) << n;
    auto bad = dposet_check(
        p.chain(), [](const Level& a, const Level& b) { return a.subset_of(b); },
        [](const Level& y, const Level&) { return y; });
    EXPECT_FALSE(bad.passed) << n;
    EXPECT_EQ(bad.failed_law, "double difference: y\\(y\\x) = x");
  }
}

}  // namespace
}  // namespace primlat
