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

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "primlat/projection.hpp"

namespace primlat {

/// Ordered single-character symbols; symbol i is the atom with bit i.
class SymbolAlphabet {
 public:
  explicit SymbolAlphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw PreconditionError("empty alphabet");
    if (symbols_.size() > kMaxAtoms) throw LimitExceeded("alphabet is limited to 16 symbols");
    for (char& c : symbols_) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      for (std::size_t j = i + 1; j < symbols_.size(); ++j)
        if (symbols_[i] == symbols_[j])
          throw PreconditionError(std::string("duplicate symbol ") + symbols_[i]);
  }

  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }

  std::optional<Mask> encode(char c) const {
    auto u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto i = symbols_.find(u);
    if (i == std::string::npos) return std::nullopt;
    return Mask{1} << i;
  }

  /// Mask of a string of symbols, e.g. "AT".
  Mask mask_of(const std::string& syms) const {
    Mask m = 0;
    for (char c : syms) {
      auto e = encode(c);
      if (!e) throw PreconditionError(std::string("symbol ") + c + " is not in the alphabet");
      m |= *e;
    }
    return m;
  }

  /// "0", "1" or the joined symbols, e.g. "A|T".
  std::string render(Mask m) const {
    if (m == 0) return "0";
    if (m == full_mask(static_cast<unsigned>(size()))) return "1";
    std::string s;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (m >> i & 1u) {
        if (!s.empty()) s += '|';
        s += symbols_[i];
      }
    return s;
  }

 private:
  std::string symbols_;
};

struct FastaRecord {
  std::string name;
  std::string tokens;  // upper-case symbols
};

/// Reads FASTA records. Whitespace is ignored and symbols are
/// case-insensitive; an unknown symbol is a ParseError carrying its
/// 1-based position within the record.
inline std::vector<FastaRecord> load_fasta(std::istream& in, const SymbolAlphabet& alphabet) {
  std::vector<FastaRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '>') {
      out.push_back({line.substr(1), {}});
      continue;
    }
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char c = line[col];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (out.empty()) throw ParseError("sequence data before the first '>' header", lineno, col + 1);
      if (!alphabet.encode(c))
        throw ParseError("position " + std::to_string(out.back().tokens.size() + 1) + ", symbol " +
                             std::string(1, c) + " is not in the alphabet",
                         lineno, col + 1);
      out.back().tokens += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  if (out.empty()) throw ParseError("empty FASTA input", 0);
  return out;
}

inline std::vector<Mask> encode(const SymbolAlphabet& alphabet, const std::string& tokens) {
  std::vector<Mask> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto e = alphabet.encode(tokens[i]);
    if (!e)
      throw PreconditionError("position " + std::to_string(i + 1) + ", symbol " +
                              std::string(1, tokens[i]) + " is not in the alphabet");
    out.push_back(*e);
  }
  return out;
}

/// Projections of one input onto every Boolean and difference level.
struct AnalysisPyramid {
  std::vector<Mask> input;
  std::vector<LevelRef> levels;
  std::vector<ProjectionMethod> methods;
  // sequences[l * methods.size() + m]
  std::vector<std::vector<Mask>> sequences;

  const std::vector<Mask>& at(std::size_t level, std::size_t method) const {
    return sequences[level * methods.size() + method];
  }
  const std::vector<Mask>& at(const LevelRef& level, ProjectionMethod method) const {
    for (std::size_t l = 0; l < levels.size(); ++l)
      for (std::size_t m = 0; m < methods.size(); ++m)
        if (levels[l] == level && methods[m] == method) return at(l, m);
    throw PreconditionError("pyramid has no " + level.name() + "/" + to_string(method) + " row");
  }
};

inline AnalysisPyramid analyze(const PrimorialLattice& p, const SymbolAlphabet& alphabet,
                               const std::string& tokens, std::vector<ProjectionMethod> methods) {
  if (alphabet.size() != p.top_n())
    throw PreconditionError("alphabet has " + std::to_string(alphabet.size()) +
                            " symbols but the lattice has " + std::to_string(p.top_n()) + " atoms");
  if (methods.empty()) throw PreconditionError("no projection method requested");
  AnalysisPyramid out;
  out.input = encode(alphabet, tokens);
  out.levels = p.members();
  out.methods = std::move(methods);
  for (const auto& level : out.levels) {
    Projector proj(p, level);
    for (auto m : out.methods) {
      std::vector<Mask> s;
      s.reserve(out.input.size());
      for (Mask x : out.input) s.push_back(proj.apply(m, x));
      out.sequences.push_back(std::move(s));
    }
  }
  return out;
}

/// Pointwise join of equal-length sequences.
inline std::vector<Mask> synthesize(const std::vector<std::vector<Mask>>& seqs) {
  if (seqs.empty()) throw PreconditionError("nothing to synthesize");
  std::vector<Mask> out(seqs.front().size(), 0);
  for (const auto& s : seqs) {
    if (s.size() != out.size())
      throw PreconditionError("sequence lengths differ: " + std::to_string(out.size()) + " and " +
                              std::to_string(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) out[i] |= s[i];
  }
  return out;
}

enum class GspKind { acgt_atcg, acgt_plus_x };

inline GspKind parse_gsp_kind(const std::string& s) {
  if (s == "acgt-atcg") return GspKind::acgt_atcg;
  if (s == "acgt-plus-x") return GspKind::acgt_plus_x;
  throw PreconditionError("unknown preset '" + s + "'");
}

struct GspPreset {
  SymbolAlphabet alphabet;
  PrimorialLattice lattice;
  /// Level holding A|T and C|G, when the chain has one.
  std::optional<LevelRef> coarse;
};

/// acgt-atcg: L2^3 has atoms A, T, C|G and L2^2 = {0, A|T, C|G, 1}.
/// acgt-plus-x: X is atom 5 and L2^4 is the first member keeping A, C, G, T.
inline GspPreset gsp_preset(GspKind kind) {
  if (kind == GspKind::acgt_atcg) {
    SymbolAlphabet a("ACGT");
    const Mask A = a.mask_of("A"), T = a.mask_of("T"), CG = a.mask_of("CG");
    std::vector<Mask> l3{0, A, T, CG, A | T, A | CG, T | CG, A | T | CG};
    std::vector<Mask> l2{0, A | T, CG, A | T | CG};
    auto p = generate_primorial(4, PrimorialStrategy::explicit_carriers({{3, l3}, {2, l2}}));
    return {std::move(a), std::move(p), LevelRef{LevelRef::Kind::boolean, 2}};
  }
  SymbolAlphabet a("ACGTX");
  const Mask keep[] = {a.mask_of("A"), a.mask_of("C"), a.mask_of("G"), a.mask_of("T")};
  auto p = generate_primorial(5, PrimorialStrategy::first_matching(4, [&](const Level& l) {
    return std::all_of(std::begin(keep), std::end(keep), [&](Mask m) { return l.contains(m); });
  }));
  return {std::move(a), std::move(p), std::nullopt};
}

inline std::size_t count_within(const std::string& tokens, const std::string& symbols) {
  return static_cast<std::size_t>(std::count_if(tokens.begin(), tokens.end(), [&](char c) {
    return symbols.find(static_cast<char>(std::toupper(static_cast<unsigned char>(c)))) !=
           std::string::npos;
  }));
}

struct GspWindow {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t at = 0;
  std::size_t cg = 0;
};

struct GspSummary {
  std::size_t length = 0;
  std::size_t at_direct = 0;
  std::size_t cg_direct = 0;
  std::optional<std::size_t> at_coarse;  // ceiling projection onto the coarse level
  std::optional<std::size_t> cg_coarse;
  std::vector<GspWindow> windows;
  // level name / method -> element -> count
  std::map<std::string, std::map<Mask, std::size_t>> histograms;
};

/// Content counts over non-overlapping windows of `window` symbols (the
/// last one may be shorter) plus per-row element histograms.
inline GspSummary gsp_summary(const GspPreset& preset, const std::string& tokens,
                              const AnalysisPyramid& pyramid, std::size_t window) {
  if (window == 0) throw PreconditionError("window must be positive");
  GspSummary s;
  s.length = tokens.size();
  s.at_direct = count_within(tokens, "AT");
  s.cg_direct = count_within(tokens, "CG");
  const Mask at = preset.alphabet.mask_of("AT"), cg = preset.alphabet.mask_of("CG");
  if (preset.coarse) {
    auto coarse = project_sequence(preset.lattice, *preset.coarse, pyramid.input,
                                   ProjectionMethod::ceiling);
    s.at_coarse = static_cast<std::size_t>(std::count(coarse.begin(), coarse.end(), at));
    s.cg_coarse = static_cast<std::size_t>(std::count(coarse.begin(), coarse.end(), cg));
  }
  for (std::size_t start = 0; start < tokens.size(); start += window) {
    auto piece = tokens.substr(start, window);
    s.windows.push_back({start, piece.size(), count_within(piece, "AT"), count_within(piece, "CG")});
  }
  for (std::size_t l = 0; l < pyramid.levels.size(); ++l)
    for (std::size_t m = 0; m < pyramid.methods.size(); ++m) {
      auto& h = s.histograms[pyramid.levels[l].name() + "/" + to_string(pyramid.methods[m])];
      for (Mask x : pyramid.at(l, m)) ++h[x];
    }
  return s;
}

/// Header row then one row per position: index, input, one column per
/// (level, method) pair.
inline void write_pyramid_tsv(std::ostream& out, const AnalysisPyramid& pyramid,
                              const std::function<std::string(Mask)>& render) {
  out << "position\tinput";
  for (const auto& l : pyramid.levels)
    for (auto m : pyramid.methods) out << '\t' << l.name() << '/' << to_string(m);
  out << '\n';
  for (std::size_t i = 0; i < pyramid.input.size(); ++i) {
    out << i << '\t' << render(pyramid.input[i]);
    for (const auto& s : pyramid.sequences) out << '\t' << render(s[i]);
    out << '\n';
  }
}

inline void write_summary(std::ostream& out, const GspPreset& preset, const GspSummary& s) {
  auto frac = [](std::size_t k, std::size_t n) {
    if (n == 0) return std::string("0");
    return to_string(Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)));
  };
  out << "length: " << s.length << '\n';
  out << "A|T count: " << s.at_direct << " fraction: " << frac(s.at_direct, s.length) << '\n';
  out << "C|G count: " << s.cg_direct << " fraction: " << frac(s.cg_direct, s.length) << '\n';
  if (s.at_coarse)
    out << "coarse " << preset.coarse->name() << " ceiling A|T: " << *s.at_coarse
        << " C|G: " << *s.cg_coarse << '\n';
  for (const auto& w : s.windows)
    out << "window " << w.start << '+' << w.length << " A|T: " << frac(w.at, w.length)
        << " C|G: " << frac(w.cg, w.length) << '\n';
  for (const auto& [row, hist] : s.histograms) {
    out << "histogram " << row << ':';
    for (const auto& [m, k] : hist) out << ' ' << preset.alphabet.render(m) << '=' << k;
    out << '\n';
  }
}

}  // namespace primlat
