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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primlat/classify.hpp"
#include "primlat/lattice.hpp"

namespace primlat {

/// First axiom of an orthocomplementation that `perp` breaks, with a witness.
struct OrthoFailure {
  std::string axiom;
  std::vector<Element> witness;
};

/// Checks involution, non-contradiction (x ^ x' = 0) and antitony.
inline std::optional<OrthoFailure> check_orthocomplement(const FiniteLattice& l,
                                                         const std::vector<Element>& perp) {
  const std::size_t n = l.size();
  if (perp.size() != n) return OrthoFailure{"total map", {}};
  for (Element x = 0; x < n; ++x)
    if (perp[x] >= n) return OrthoFailure{"total map", {x}};
  for (Element x = 0; x < n; ++x)
    if (perp[perp[x]] != x) return OrthoFailure{"involution", {x}};
  for (Element x = 0; x < n; ++x)
    if (l.meet(x, perp[x]) != l.bottom()) return OrthoFailure{"non-contradiction", {x}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(perp[y], perp[x])) return OrthoFailure{"antitone", {x, y}};
  return std::nullopt;
}

/// A bounded lattice with a validated orthocomplementation.
class OrthoLattice {
 public:
  /// Throws AxiomViolation naming the failed axiom and witness labels.
  OrthoLattice(FiniteLattice l, std::vector<Element> perp)
      : lattice_(std::move(l)), perp_(std::move(perp)) {
    if (lattice_.empty()) throw PreconditionError("orthocomplement needs a nonempty lattice");
    if (auto f = check_orthocomplement(lattice_, perp_)) {
      std::vector<std::string> w;
      for (Element e : f->witness) w.push_back(lattice_.label(e));
      throw AxiomViolation(f->axiom, w);
    }
    check_consequences();
  }

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const std::vector<Element>& perp_map() const noexcept { return perp_; }
  Element perp(Element x) const { return perp_[x]; }
  std::size_t size() const noexcept { return lattice_.size(); }

  Element join(Element x, Element y) const { return lattice_.join(x, y); }
  Element meet(Element x, Element y) const { return lattice_.meet(x, y); }
  bool leq(Element x, Element y) const { return lattice_.leq(x, y); }
  Element bottom() const { return lattice_.bottom(); }
  Element top() const { return lattice_.top(); }

 private:
  // Consequences every orthocomplementation has; a failure is a library bug.
  void check_consequences() const {
    const auto& l = lattice_;
    if (perp(l.bottom()) != l.top() || perp(l.top()) != l.bottom())
      throw std::logic_error("orthocomplement does not swap the bounds");
    for (Element x = 0; x < size(); ++x) {
      if (l.join(x, perp(x)) != l.top()) throw std::logic_error("excluded middle fails");
      for (Element y = 0; y < size(); ++y) {
        if (perp(l.join(x, y)) != l.meet(perp(x), perp(y)))
          throw std::logic_error("join De Morgan law fails");
        if (perp(l.meet(x, y)) != l.join(perp(x), perp(y)))
          throw std::logic_error("meet De Morgan law fails");
      }
    }
  }

  FiniteLattice lattice_;
  std::vector<Element> perp_;
};

/// Builds an orthocomplement from label pairs a:b meaning a' = b and b' = a.
inline OrthoLattice attach_ortho(FiniteLattice l,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t none = l.size();
  std::vector<Element> perp(l.size(), none);
  for (const auto& [a, b] : pairs) {
    Element x = l.index_of(a), y = l.index_of(b);
    if ((perp[x] != none && perp[x] != y) || (perp[y] != none && perp[y] != x))
      throw AxiomViolation("involution", {a, b});
    perp[x] = y;
    perp[y] = x;
  }
  for (Element x = 0; x < l.size(); ++x)
    if (perp[x] == none) throw AxiomViolation("total map", {l.label(x)});
  return OrthoLattice(std::move(l), std::move(perp));
}

/// Orthomodular identity: x <= y implies x v (x' ^ y) = y.
inline std::optional<std::pair<Element, Element>> orthomodular_failure(const OrthoLattice& o) {
  for (Element x = 0; x < o.size(); ++x)
    for (Element y = 0; y < o.size(); ++y)
      if (o.leq(x, y) && o.join(x, o.meet(o.perp(x), y)) != y) return std::pair{x, y};
  return std::nullopt;
}

struct OrthoClass {
  bool orthocomplemented = true;
  bool orthomodular = false;
  bool modular_orthocomplemented = false;
  bool boolean = false;
};

/// Boolean implies modular-orthocomplemented implies orthomodular; asserted.
inline OrthoClass ortho_class(const OrthoLattice& o) {
  auto rep = classify(o.lattice());
  OrthoClass c;
  c.orthomodular = !orthomodular_failure(o).has_value();
  c.modular_orthocomplemented = rep.modular;
  c.boolean = rep.boolean;
  if (c.boolean && !c.modular_orthocomplemented)
    throw std::logic_error("boolean lattice reported non-modular");
  if (c.modular_orthocomplemented && !c.orthomodular)
    throw std::logic_error("modular orthocomplemented lattice reported non-orthomodular");
  return c;
}

/// Every orthocomplementation of l, in lexicographic order of the maps.
inline std::vector<std::vector<Element>> find_orthocomplements(const FiniteLattice& l,
                                                               std::size_t limit = 1000) {
  std::vector<std::vector<Element>> out;
  const std::size_t n = l.size();
  if (n == 0) return out;
  const std::size_t none = n;
  std::vector<Element> perp(n, none);
  auto consistent = [&](Element x) {
    Element px = perp[x];
    for (Element y = 0; y < n; ++y) {
      if (perp[y] == none) continue;
      if (l.leq(x, y) && !l.leq(perp[y], px)) return false;
      if (l.leq(y, x) && !l.leq(px, perp[y])) return false;
    }
    return true;
  };
  auto extend = [&](auto&& self, Element x) -> void {
    if (out.size() >= limit) return;
    while (x < n && perp[x] != none) ++x;
    if (x == n) {
      out.push_back(perp);
      return;
    }
    for (Element y = 0; y < n; ++y) {
      if (perp[y] != none) continue;
      if (l.join(x, y) != l.top() || l.meet(x, y) != l.bottom()) continue;
      perp[x] = y;
      perp[y] = x;
      if (consistent(x) && consistent(y)) self(self, x + 1);
      perp[x] = perp[y] = none;
    }
  };
  extend(extend, 0);
  return out;
}

/// Sasaki projection onto x: (y v x') ^ x.
inline Element sasaki(const OrthoLattice& o, Element x, Element y) {
  return o.meet(o.join(y, o.perp(x)), x);
}

/// x is orthogonal to y when x <= y'.
inline bool orthogonal(const OrthoLattice& o, Element x, Element y) {
  return o.leq(x, o.perp(y));
}

/// x commutes with y when x = (x ^ y) v (x ^ y').
inline bool commutes(const OrthoLattice& o, Element x, Element y) {
  return x == o.join(o.meet(x, y), o.meet(x, o.perp(y)));
}

/// Unordered orthogonal pairs {x, y}, x <= y by index, including x = y.
inline std::vector<std::pair<Element, Element>> orthogonal_pairs(const OrthoLattice& o) {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < o.size(); ++x)
    for (Element y = x; y < o.size(); ++y)
      if (orthogonal(o, x, y)) out.emplace_back(x, y);
  return out;
}

/// Elements that commute with every element.
inline std::vector<Element> center(const OrthoLattice& o) {
  std::vector<Element> out;
  for (Element c = 0; c < o.size(); ++c) {
    bool all = true;
    for (Element y = 0; y < o.size() && all; ++y) all = commutes(o, c, y);
    if (all) out.push_back(c);
  }
  return out;
}

/// Whether every x commutes with c. Differs from membership in the center
/// when commuting is not symmetric (outside orthomodular lattices).
inline bool commuted_by_all(const OrthoLattice& o, Element c) {
  for (Element x = 0; x < o.size(); ++x)
    if (!commutes(o, x, c)) return false;
  return true;
}

/// Whether x -> (x ^ c, x ^ c') is an order isomorphism onto [0,c] x [0,c'].
inline bool splits_at(const OrthoLattice& o, Element c) {
  const std::size_t n = o.size();
  const Element cp = o.perp(c);
  std::size_t below_c = 0, below_cp = 0;
  for (Element x = 0; x < n; ++x) {
    below_c += o.leq(x, c) ? 1 : 0;
    below_cp += o.leq(x, cp) ? 1 : 0;
  }
  if (below_c * below_cp != n) return false;
  std::map<std::pair<Element, Element>, Element> image;
  for (Element x = 0; x < n; ++x)
    if (!image.emplace(std::pair{o.meet(x, c), o.meet(x, cp)}, x).second) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      bool prod = o.leq(o.meet(x, c), o.meet(y, c)) && o.leq(o.meet(x, cp), o.meet(y, cp));
      if (prod != o.leq(x, y)) return false;
    }
  return true;
}

/// (x ^ y')' = y v (x' ^ y') for all x, y.
inline bool elkan_law(const OrthoLattice& o) {
  for (Element x = 0; x < o.size(); ++x)
    for (Element y = 0; y < o.size(); ++y)
      if (o.perp(o.meet(x, o.perp(y))) != o.join(y, o.meet(o.perp(x), o.perp(y)))) return false;
  return true;
}

/// The hexagon: 0 < p < q' < 1 and 0 < q < p' < 1.
inline OrthoLattice hexagon() {
  auto l = FiniteLattice::require(FinitePoset::from_labelled_covers(
      {"0", "p", "q", "q'", "p'", "1"},
      {{"0", "p"}, {"0", "q"}, {"p", "q'"}, {"q", "p'"}, {"q'", "1"}, {"p'", "1"}}));
  return attach_ortho(std::move(l), {{"0", "1"}, {"p", "p'"}, {"q", "q'"}});
}

}  // namespace primlat
