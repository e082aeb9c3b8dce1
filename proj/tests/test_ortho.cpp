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
#include <numeric>

#include "fixtures.hpp"

namespace primlat {
namespace {

using testing::at;

std::vector<std::string> labels(const OrthoLattice& o, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(o.lattice().label(x));
  return out;
}

TEST(Ortho, HexagonIsOrthocomplementedOnly) {
  auto o = hexagon();
  auto c = ortho_class(o);
  EXPECT_TRUE(c.orthocomplemented);
  EXPECT_FALSE(c.orthomodular);
  EXPECT_FALSE(c.modular_orthocomplemented);
  EXPECT_FALSE(c.boolean);
  auto f = orthomodular_failure(o);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(o.leq(f->first, f->second));
}

TEST(Ortho, HexagonSasakiValues) {
  auto o = hexagon();
  const Element z = at(o, "0"), p = at(o, "p"), q = at(o, "q"), qp = at(o, "q'"), pp = at(o, "p'"),
                i = at(o, "1");
  EXPECT_EQ(sasaki(o, p, q), z);
  EXPECT_EQ(sasaki(o, p, pp), z);
  EXPECT_EQ(sasaki(o, p, qp), p);
  EXPECT_EQ(sasaki(o, qp, p), qp);
  EXPECT_EQ(sasaki(o, p, i), p);
  EXPECT_EQ(sasaki(o, p, z), z);
}

TEST(Ortho, HexagonRelations) {
  auto o = hexagon();
  auto pairs = orthogonal_pairs(o);
  EXPECT_EQ(pairs.size(), 9u);
  std::size_t distinct = 0;
  for (auto [x, y] : pairs) distinct += x != y ? 1 : 0;
  EXPECT_EQ(distinct, 8u);
  EXPECT_EQ(labels(o, center(o)), (std::vector<std::string>{"0", "p", "q", "1"}));
  // Commuting checked directly from x = (x ^ y) v (x ^ y') over all 36 ordered pairs.
  std::size_t commuting = 0;
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) commuting += commutes(o, x, y) ? 1 : 0;
  EXPECT_LT(commuting, 36u);
  EXPECT_FALSE(commutes(o, at(o, "q'"), at(o, "p")));
  EXPECT_TRUE(commutes(o, at(o, "p"), at(o, "q'")));
}

TEST(Ortho, PowersetComplementHasAllFlags) {
  for (unsigned n = 1; n <= 4; ++n) {
    auto o = testing::boolean_ortho(n);
    auto c = ortho_class(o);
    EXPECT_TRUE(c.orthomodular && c.modular_orthocomplemented && c.boolean);
    EXPECT_EQ(center(o).size(), o.size());
    EXPECT_TRUE(elkan_law(o));
  }
}

TEST(Ortho, FourMiddlesIsModularButNotBoolean) {
  auto l = testing::lattice_from({"0", "a", "a'", "b", "b'", "1"},
                                 {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"},
                                  {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}});
  auto o = attach_ortho(l, {{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
  auto c = ortho_class(o);
  EXPECT_TRUE(c.orthomodular);
  EXPECT_TRUE(c.modular_orthocomplemented);
  EXPECT_FALSE(c.boolean);
  EXPECT_EQ(labels(o, center(o)), (std::vector<std::string>{"0", "1"}));
}

TEST(Ortho, PentagonHasNoOrthocomplement) {
  auto l = testing::pentagon();
  EXPECT_TRUE(find_orthocomplements(l).empty());
  // Every involution of the carrier breaks an axiom.
  std::vector<Element> perm(l.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t involutions = 0;
  do {
    bool inv = true;
    for (Element x = 0; x < l.size(); ++x) inv = inv && perm[perm[x]] == x;
    if (!inv) continue;
    ++involutions;
    auto f = check_orthocomplement(l, perm);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->axiom == "non-contradiction" || f->axiom == "antitone") << f->axiom;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(involutions, 26u);
}

TEST(Ortho, AttachReportsTheBrokenAxiom) {
  auto l = testing::powerset(2);
  try {
    attach_ortho(l, {{"{}", "{1,2}"}, {"{1}", "{1}"}, {"{2}", "{2}"}});
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "non-contradiction");
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"{1}"}));
  }
  try {
    attach_ortho(l, {{"{}", "{1,2}"}, {"{1}", "{2}"}, {"{1}", "{1,2}"}});
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "involution");
  }
  try {
    attach_ortho(l, {{"{}", "{1,2}"}});
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "total map");
  }
  // A 4-chain swapped end to end is involutive but not a complement.
  auto c = chain({"0", "x", "y", "1"});
  EXPECT_THROW(attach_ortho(c, {{"0", "1"}, {"x", "y"}}), AxiomViolation);
}

TEST(Ortho, SearchFindsTheHexagonMap) {
  auto o = hexagon();
  auto found = find_orthocomplements(o.lattice());
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], o.perp_map());
}

TEST(Ortho, SasakiProjectionBasics) {
  for (const auto& o : testing::all_ortho_lattices(6))
    for (Element x = 0; x < o.size(); ++x) {
      EXPECT_EQ(sasaki(o, x, o.top()), x);
      EXPECT_EQ(sasaki(o, x, o.perp(x)), o.bottom());
      EXPECT_EQ(sasaki(o, o.top(), x), x);
      for (Element y = 0; y < o.size(); ++y) EXPECT_TRUE(o.leq(sasaki(o, x, y), x));
    }
}

TEST(Ortho, InheritedComplementOnLevels) {
  auto o = inherited_ortho(Level(3, {0b000, 0b001, 0b110, 0b111}));
  EXPECT_EQ(ortho_class(o).boolean, true);
  EXPECT_THROW(inherited_ortho(Level(3, {0b000, 0b001, 0b111})), AxiomViolation);
}

}  // namespace
}  // namespace primlat
