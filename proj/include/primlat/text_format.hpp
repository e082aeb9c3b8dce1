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

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "primlat/lattice.hpp"
#include "primlat/rational.hpp"

namespace primlat {

/// Line-based lattice description:
///
///   lattice N5
///   elements 0 a b c 1
///   covers 0<a a<b b<1 0<c c<1
///   ortho a:b            (optional)
///   valuation a=1/2      (optional)
///   prob a=1/3           (optional)
///   negation a->b        (optional)
///
/// `#` starts a comment. Stanzas may repeat; elements must be declared
/// before they are referenced. Covers may be chained, e.g. 0<a<1.
struct LatticeDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::string>> ortho;
  std::vector<std::pair<std::string, Rational>> valuation;
  std::vector<std::pair<std::string, Rational>> prob;
  std::vector<std::pair<std::string, std::string>> negation;

  FinitePoset poset() const { return FinitePoset::from_labelled_covers(elements, covers); }
  PosetOrLattice build() const { return build_lattice(elements, covers); }

  /// Values listed per element in lattice order; every element must appear once.
  static std::vector<Rational> table(const FiniteLattice& l,
                                     const std::vector<std::pair<std::string, Rational>>& entries,
                                     const char* stanza) {
    std::vector<std::optional<Rational>> v(l.size());
    for (const auto& [e, r] : entries) {
      Element x = l.index_of(e);
      if (v[x]) throw PreconditionError(std::string(stanza) + " given twice for '" + e + "'");
      v[x] = r;
    }
    std::vector<Rational> out;
    for (Element x = 0; x < l.size(); ++x) {
      if (!v[x]) throw PreconditionError(std::string(stanza) + " missing for '" + l.label(x) + "'");
      out.push_back(*v[x]);
    }
    return out;
  }
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

}  // namespace detail

inline LatticeDocument parse_lattice_text(std::istream& in) {
  LatticeDocument doc;
  std::map<std::string, bool> declared;
  std::string line;
  std::size_t lineno = 0;
  bool saw_elements = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto fail = [&](const std::string& what, std::size_t col) -> ParseError {
      return ParseError(what, lineno, col);
    };
    auto element = [&](const std::string& s, std::size_t col) -> const std::string& {
      if (s.empty()) throw fail("empty element name", col);
      if (!declared.count(s)) throw fail("unknown element '" + s + "'", col);
      return s;
    };
    auto split = [&](const detail::Token& t, const std::string& sep) {
      auto at = t.text.find(sep);
      if (at == std::string::npos)
        throw fail("expected '" + sep + "' in '" + t.text + "'", t.column);
      return std::make_pair(at, t.text.substr(0, at));
    };
    auto rational_entries = [&](std::vector<std::pair<std::string, Rational>>& into) {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto [at, lhs] = split(toks[i], "=");
        element(lhs, toks[i].column);
        try {
          into.emplace_back(lhs, parse_rational(toks[i].text.substr(at + 1)));
        } catch (const ParseError& e) {
          throw fail(e.what(), toks[i].column + at + 1);
        }
      }
    };

    if (kw == "lattice") {
      if (toks.size() > 2) throw fail("lattice takes one name", toks[2].column);
      if (toks.size() == 2) doc.name = toks[1].text;
    } else if (kw == "elements") {
      saw_elements = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.text.find_first_of("<:=") != std::string::npos || t.text.find("->") != std::string::npos)
          throw fail("element name '" + t.text + "' contains a reserved character", t.column);
        if (declared.count(t.text)) throw fail("duplicate element '" + t.text + "'", t.column);
        declared[t.text] = true;
        doc.elements.push_back(t.text);
      }
    } else if (kw == "covers") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto& t = toks[i];
        std::vector<std::pair<std::string, std::size_t>> chain;
        std::size_t from = 0;
        while (true) {
          auto at = t.text.find('<', from);
          chain.emplace_back(t.text.substr(from, at == std::string::npos ? std::string::npos : at - from),
                             t.column + from);
          if (at == std::string::npos) break;
          from = at + 1;
        }
        if (chain.size() < 2) throw fail("expected 'a<b' in '" + t.text + "'", t.column);
        for (const auto& [e, col] : chain) element(e, col);
        for (std::size_t k = 0; k + 1 < chain.size(); ++k)
          doc.covers.emplace_back(chain[k].first, chain[k + 1].first);
      }
    } else if (kw == "ortho") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto [at, lhs] = split(toks[i], ":");
        std::string rhs = toks[i].text.substr(at + 1);
        element(lhs, toks[i].column);
        element(rhs, toks[i].column + at + 1);
        doc.ortho.emplace_back(lhs, rhs);
      }
    } else if (kw == "negation") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto [at, lhs] = split(toks[i], "->");
        std::string rhs = toks[i].text.substr(at + 2);
        element(lhs, toks[i].column);
        element(rhs, toks[i].column + at + 2);
        doc.negation.emplace_back(lhs, rhs);
      }
    } else if (kw == "valuation") {
      rational_entries(doc.valuation);
    } else if (kw == "prob") {
      rational_entries(doc.prob);
    } else {
      throw fail("unknown stanza '" + kw + "'", toks[0].column);
    }
  }
  if (!saw_elements) throw ParseError("missing 'elements' stanza", lineno == 0 ? 1 : lineno);
  return doc;
}

inline LatticeDocument parse_lattice_text(const std::string& text) {
  std::istringstream in(text);
  return parse_lattice_text(in);
}

}  // namespace primlat
