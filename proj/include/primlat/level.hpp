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
#include <bit>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primlat/lattice.hpp"
#include "primlat/ortho.hpp"

namespace primlat {

/// Subset of {1..N} as a bit mask; bit i stands for atom i+1.
using Mask = std::uint32_t;

inline constexpr unsigned kMaxAtoms = 16;

inline Mask full_mask(unsigned atoms) {
  if (atoms > kMaxAtoms) throw LimitExceeded("at most 16 atoms are supported");
  return (Mask{1} << atoms) - 1;
}

/// "{1,3}" style literal with 1-based atom indices; "{}" for the empty set.
inline std::string subset_literal(Mask m) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < 32; ++i)
    if (m >> i & 1u) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

inline Mask parse_subset_literal(std::string_view text, unsigned atoms) {
  auto bad = [&](const std::string& why) {
    return PreconditionError("bad subset literal '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw bad("expected {..}");
  Mask m = 0;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    if (tok.empty()) throw bad("empty index");
    unsigned v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw bad("non-digit");
      v = v * 10 + static_cast<unsigned>(c - '0');
      if (v > atoms) break;
    }
    if (v == 0 || v > atoms) throw bad("index out of range 1.." + std::to_string(atoms));
    m |= Mask{1} << (v - 1);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw bad("trailing comma");
  }
  return m;
}

/// Subset literals appearing on one line from column `from` onwards;
/// whitespace inside and between literals is ignored.
inline std::vector<Mask> subset_literals_in_line(const std::string& line, std::size_t from,
                                                 unsigned atoms, std::size_t lineno) {
  std::vector<Mask> out;
  std::size_t i = from;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c != '{') throw ParseError("expected '{' but found '" + std::string(1, c) + "'", lineno, i + 1);
    auto close = line.find('}', i);
    if (close == std::string::npos) throw ParseError("unterminated subset literal", lineno, i + 1);
    std::string lit;
    for (std::size_t k = i; k <= close; ++k)
      if (line[k] != ' ' && line[k] != '\t') lit += line[k];
    try {
      out.push_back(parse_subset_literal(lit, atoms));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), lineno, i + 1);
    }
    i = close + 1;
  }
  return out;
}

/// Whitespace-separated subset literals, e.g. "{1} {2,3} {}". `#` starts a comment.
inline std::vector<Mask> read_subset_literals(std::istream& in, unsigned atoms) {
  std::vector<Mask> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    auto more = subset_literals_in_line(line, 0, atoms, ++lineno);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

/// A set of subsets of {1..N} under inclusion. Carriers are kept sorted
/// ascending, which is also the canonical encoding used to compare levels.
class Level {
 public:
  Level() = default;

  Level(unsigned atoms, std::vector<Mask> carrier) : atoms_(atoms) {
    const Mask full = full_mask(atoms);
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    for (Mask m : carrier)
      if ((m & ~full) != 0) throw PreconditionError("subset outside the atom range");
    carrier_ = std::move(carrier);
    std::vector<std::string> labels;
    labels.reserve(carrier_.size());
    for (Mask m : carrier_) labels.push_back(subset_literal(m));
    Relation r(carrier_.size());
    for (std::size_t i = 0; i < carrier_.size(); ++i)
      for (std::size_t j = 0; j < carrier_.size(); ++j)
        if ((carrier_[i] & ~carrier_[j]) == 0) r.set(i, j);
    auto poset = FinitePoset::from_order(std::move(labels), std::move(r));
    if (auto l = FiniteLattice::from_poset(std::move(poset)))
      lattice_ = std::make_shared<const FiniteLattice>(std::move(*l));
  }

  /// Every subset of {1..atoms}.
  static Level boolean(unsigned atoms) {
    std::vector<Mask> all(std::size_t{1} << atoms);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Mask>(i);
    return Level(atoms, std::move(all));
  }

  unsigned atoms() const noexcept { return atoms_; }
  const std::vector<Mask>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }

  bool contains(Mask m) const { return std::binary_search(carrier_.begin(), carrier_.end(), m); }

  std::optional<Element> index_of(Mask m) const {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), m);
    if (it == carrier_.end() || *it != m) return std::nullopt;
    return static_cast<Element>(it - carrier_.begin());
  }

  Element require_index(Mask m) const {
    auto i = index_of(m);
    if (!i) throw PreconditionError(subset_literal(m) + " is not in the level");
    return *i;
  }

  Mask mask(Element e) const { return carrier_.at(e); }

  bool is_lattice() const noexcept { return lattice_ != nullptr; }

  /// Induced order lattice; labels are subset literals.
  const FiniteLattice& lattice() const {
    if (!lattice_) throw PreconditionError("level is not a lattice under inclusion");
    return *lattice_;
  }

  /// Least and greatest carrier elements under inclusion, if they exist.
  std::optional<Mask> bottom() const {
    for (Mask m : carrier_)
      if (std::all_of(carrier_.begin(), carrier_.end(), [&](Mask o) { return (m & ~o) == 0; }))
        return m;
    return std::nullopt;
  }
  std::optional<Mask> top() const {
    for (Mask m : carrier_)
      if (std::all_of(carrier_.begin(), carrier_.end(), [&](Mask o) { return (o & ~m) == 0; }))
        return m;
    return std::nullopt;
  }

  /// Induced join and meet (least upper / greatest lower bound inside the level).
  Mask join(Mask a, Mask b) const {
    return mask(lattice().join(require_index(a), require_index(b)));
  }
  Mask meet(Mask a, Mask b) const {
    return mask(lattice().meet(require_index(a), require_index(b)));
  }

  friend bool operator==(const Level& a, const Level& b) {
    return a.atoms_ == b.atoms_ && a.carrier_ == b.carrier_;
  }
  friend bool operator<(const Level& a, const Level& b) { return a.carrier_ < b.carrier_; }

  bool subset_of(const Level& other) const {
    return std::includes(other.carrier_.begin(), other.carrier_.end(), carrier_.begin(),
                         carrier_.end());
  }

  std::string literal() const {
    std::string s;
    for (std::size_t i = 0; i < carrier_.size(); ++i) s += (i ? " " : "") + subset_literal(carrier_[i]);
    return s;
  }

 private:
  unsigned atoms_ = 0;
  std::vector<Mask> carrier_;
  std::shared_ptr<const FiniteLattice> lattice_;
};

/// Whether the level, with the inclusion order, is a Boolean lattice whose
/// complement of x is top \ x. Works through atom sets: the map x -> {atoms
/// below x} has to be an order isomorphism onto the full power set.
inline bool is_complement_closed_boolean(std::span<const Mask> carrier) {
  if (carrier.empty()) return false;
  Mask top = 0, bottom = ~Mask{0};
  for (Mask m : carrier) {
    top |= m;
    bottom &= m;
  }
  bool has_top = false, has_bottom = false;
  for (Mask m : carrier) {
    has_top |= m == top;
    has_bottom |= m == bottom;
  }
  if (!has_top || !has_bottom || bottom != 0) return false;
  const std::size_t n = carrier.size();
  if (!std::has_single_bit(n)) return false;
  const unsigned rank = static_cast<unsigned>(std::countr_zero(n));
  std::vector<Mask> atom_masks;
  for (Mask m : carrier) {
    if (m == 0) continue;
    bool minimal = true;
    for (Mask o : carrier)
      if (o != 0 && o != m && (o & ~m) == 0) {
        minimal = false;
        break;
      }
    if (minimal) atom_masks.push_back(m);
  }
  if (atom_masks.size() != rank) return false;
  auto signature = [&](Mask m) {
    std::uint32_t s = 0;
    for (unsigned i = 0; i < rank; ++i)
      if ((atom_masks[i] & ~m) == 0) s |= 1u << i;
    return s;
  };
  std::vector<std::uint32_t> sig(n);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sig[i] = signature(carrier[i]);
    if (seen[sig[i]]) return false;
    seen[sig[i]] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool sub = (carrier[i] & ~carrier[j]) == 0;
      bool sig_sub = (sig[i] & ~sig[j]) == 0;
      if (sub != sig_sub) return false;
    }
  const std::uint32_t all = (std::uint32_t{1} << rank) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    Mask c = top & ~carrier[i];
    auto it = std::find(carrier.begin(), carrier.end(), c);
    if (it == carrier.end()) return false;
    if (sig[static_cast<std::size_t>(it - carrier.begin())] != (all & ~sig[i])) return false;
  }
  return true;
}

/// The level with complement pairs inherited from set complement within its top.
inline OrthoLattice inherited_ortho(const Level& level) {
  const auto& l = level.lattice();
  auto top = level.top();
  if (!top || level.bottom() != Mask{0}) throw PreconditionError("level is not bounded by {} and its top");
  std::vector<Element> perp(l.size());
  for (Element e = 0; e < l.size(); ++e) {
    Mask c = *top & ~level.mask(e);
    auto i = level.index_of(c);
    if (!i) throw AxiomViolation("total map", {subset_literal(level.mask(e))});
    perp[e] = *i;
  }
  return OrthoLattice(l, std::move(perp));
}

}  // namespace primlat
