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

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"

namespace primlat {
namespace {

void expect_parse_error(const std::string& text, std::size_t line, std::size_t col, const std::string& what) {
  try {
    parse_lattice_text(text);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text;
    EXPECT_EQ(e.column(), col) << text;
    EXPECT_NE(std::string(e.what()).find(what), std::string::npos) << e.what();
    return;
  }
  ADD_FAILURE() << "no error for:\n" << text;
}

TEST(TextFormat, ParsesAllStanzas) {
  auto doc = parse_lattice_text(
      "lattice demo  # trailing comment\n"
      "elements 0 a b 1\n"
      "covers 0<a<1 0<b<1\n"
      "ortho 0:1 a:b\n"
      "valuation 0=0 a=1 b=1 1=2\n"
      "prob 0=0 a=1/2 b=2/4 1=1\n"
      "negation 0->1 a->b b->a 1->0\n");
  EXPECT_EQ(doc.name, "demo");
  EXPECT_EQ(doc.elements, (std::vector<std::string>{"0", "a", "b", "1"}));
  EXPECT_EQ(doc.covers.size(), 4u);
  EXPECT_EQ(doc.ortho.size(), 2u);
  EXPECT_EQ(doc.negation.size(), 4u);
  auto l = std::get<FiniteLattice>(doc.build());
  auto p = LatticeDocument::table(l, doc.prob, "prob");
  EXPECT_EQ(p[l.index_of("b")], Rational(1, 2));
  EXPECT_EQ(LatticeDocument::table(l, doc.valuation, "valuation")[l.top()], Rational(2));
}

TEST(TextFormat, ErrorsCarryLineAndColumn) {
  expect_parse_error("elements 0 1\ncovers 0<x\n", 2, 10, "unknown element 'x'");
  expect_parse_error("elements 0 1\nfoo 0\n", 2, 1, "unknown stanza 'foo'");
  expect_parse_error("elements 0 0\n", 1, 12, "duplicate element '0'");
  expect_parse_error("elements 0 a<b\n", 1, 12, "reserved character");
  expect_parse_error("elements 0 1\ncovers 01\n", 2, 8, "expected 'a<b'");
  expect_parse_error("elements 0 1\nprob 0=1/0\n", 2, 8, "");
  expect_parse_error("elements 0 1\northo 0-1\n", 2, 7, "expected ':'");
  expect_parse_error("covers\n", 1, 0, "missing 'elements'");
  expect_parse_error("lattice a b\nelements 0\n", 1, 11, "one name");
}

TEST(TextFormat, TableErrors) {
  auto doc = parse_lattice_text("elements 0 1\ncovers 0<1\nprob 0=0\n");
  auto l = std::get<FiniteLattice>(doc.build());
  EXPECT_THROW(LatticeDocument::table(l, doc.prob, "prob"), PreconditionError);
  auto twice = parse_lattice_text("elements 0 1\ncovers 0<1\nprob 0=0 0=0 1=1\n");
  EXPECT_THROW(LatticeDocument::table(l, twice.prob, "prob"), PreconditionError);
}

TEST(TextFormat, NonLatticeInput) {
  std::ifstream in(testing::data_path("crown.lat"));
  auto doc = parse_lattice_text(in);
  EXPECT_TRUE(std::holds_alternative<FinitePoset>(doc.build()));
}

TEST(TextFormat, RoundTripThroughWriter) {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      std::ostringstream out;
      write_lattice_text(out, l.poset(), "L");
      auto doc = parse_lattice_text(out.str());
      EXPECT_EQ(doc.name, "L");
      auto back = std::get<FiniteLattice>(doc.build());
      EXPECT_EQ(back.labels(), l.labels());
      EXPECT_EQ(back.poset().cover_pairs(), l.poset().cover_pairs());
    }
  for (int trial = 0; trial < 30; ++trial) {
    auto p = testing::random_poset(rng, 9);
    std::ostringstream out;
    write_lattice_text(out, p, "P");
    EXPECT_EQ(parse_lattice_text(out.str()).poset().cover_pairs(), p.cover_pairs());
  }
}

TEST(SubsetLiterals, ParseAndPrint) {
  EXPECT_EQ(parse_subset_literal("{}", 3), 0u);
  EXPECT_EQ(parse_subset_literal("{1,3}", 3), 5u);
  EXPECT_EQ(subset_literal(5), "{1,3}");
  for (Mask m = 0; m < 64; ++m) EXPECT_EQ(parse_subset_literal(subset_literal(m), 6), m);
  for (const char* bad : {"{4}", "{0}", "{1,}", "{,1}", "1,2", "{a}", "{"})
    EXPECT_THROW(parse_subset_literal(bad, 3), PreconditionError) << bad;
  std::istringstream in("{1} { 2 , 3 }  # note\n\n{}\n");
  EXPECT_EQ(read_subset_literals(in, 3), (std::vector<Mask>{1, 6, 0}));
  std::istringstream bad("{1}\n {2} x\n");
  try {
    read_subset_literals(bad, 3);
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
}

}  // namespace
}  // namespace primlat
