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
#include <stdexcept>
#include <string>
#include <vector>

#include "primlat/lattice.hpp"

namespace primlat {

enum class NegationClass {
  subminimal,
  minimal,
  intuitionistic,
  fuzzy,
  de_morgan,
  kleene,
  ortho,
  orthomodular,
};

inline constexpr NegationClass kAllNegationClasses[] = {
    NegationClass::subminimal, NegationClass::minimal, NegationClass::intuitionistic,
    NegationClass::fuzzy,      NegationClass::de_morgan, NegationClass::kleene,
    NegationClass::ortho,      NegationClass::orthomodular};

inline const char* to_string(NegationClass c) {
  switch (c) {
    case NegationClass::subminimal: return "subminimal";
    case NegationClass::minimal: return "minimal";
    case NegationClass::intuitionistic: return "intuitionistic";
    case NegationClass::fuzzy: return "fuzzy";
    case NegationClass::de_morgan: return "de-morgan";
    case NegationClass::kleene: return "kleene";
    case NegationClass::ortho: return "ortho";
    case NegationClass::orthomodular: return "orthomodular";
  }
  return "?";
}

/// Set of negation classes a map belongs to.
class NegationClasses {
 public:
  bool contains(NegationClass c) const { return bits_ >> static_cast<unsigned>(c) & 1u; }
  void insert(NegationClass c) { bits_ |= 1u << static_cast<unsigned>(c); }
  bool empty() const { return bits_ == 0; }
  friend bool operator==(const NegationClasses&, const NegationClasses&) = default;

  std::vector<NegationClass> list() const {
    std::vector<NegationClass> out;
    for (auto c : kAllNegationClasses)
      if (contains(c)) out.push_back(c);
    return out;
  }

 private:
  unsigned bits_ = 0;
};

inline NegationClasses negation_classes(std::initializer_list<NegationClass> cs) {
  NegationClasses s;
  for (auto c : cs) s.insert(c);
  return s;
}

/// Builds a negation table from label pairs a -> b.
inline std::vector<Element> negation_from_labels(
    const FiniteLattice& l, const std::vector<std::pair<std::string, std::string>>& arrows) {
  const std::size_t none = l.size();
  std::vector<Element> neg(l.size(), none);
  for (const auto& [a, b] : arrows) {
    Element x = l.index_of(a);
    if (neg[x] != none) throw PreconditionError("negation given twice for '" + a + "'");
    neg[x] = l.index_of(b);
  }
  for (Element x = 0; x < l.size(); ++x)
    if (neg[x] == none) throw PreconditionError("negation missing for '" + l.label(x) + "'");
  return neg;
}

/// Classifies a unary map on a bounded lattice. Asserts the consequences that
/// each class guarantees (e.g. a fuzzy negation sends 0 to 1).
inline NegationClasses classify_negation(const FiniteLattice& l, const std::vector<Element>& neg) {
  const std::size_t n = l.size();
  if (n == 0) throw PreconditionError("negation needs a nonempty lattice");
  if (neg.size() != n) throw PreconditionError("negation must be total");
  for (Element x = 0; x < n; ++x)
    if (neg[x] >= n) throw PreconditionError("negation maps outside the lattice");
  const Element zero = l.bottom(), one = l.top();
  auto forall = [&](auto pred) {
    for (Element x = 0; x < n; ++x)
      if (!pred(x)) return false;
    return true;
  };
  auto forall2 = [&](auto pred) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!pred(x, y)) return false;
    return true;
  };

  NegationClasses out;
  const bool antitone = forall2([&](Element x, Element y) {
    return !l.leq(x, y) || l.leq(neg[y], neg[x]);
  });
  if (!antitone) return out;
  out.insert(NegationClass::subminimal);
  const bool weak_double = forall([&](Element x) { return l.leq(x, neg[neg[x]]); });
  if (!weak_double) return out;
  out.insert(NegationClass::minimal);
  const bool non_contradiction = forall([&](Element x) { return l.meet(x, neg[x]) == zero; });
  const bool involution = forall([&](Element x) { return neg[neg[x]] == x; });
  if (non_contradiction) out.insert(NegationClass::intuitionistic);
  if (neg[one] == zero) out.insert(NegationClass::fuzzy);
  if (involution) {
    out.insert(NegationClass::de_morgan);
    const bool kleene = forall2([&](Element x, Element y) {
      return l.leq(l.meet(x, neg[x]), l.join(y, neg[y]));
    });
    if (kleene) out.insert(NegationClass::kleene);
    if (non_contradiction) {
      out.insert(NegationClass::ortho);
      const bool om = forall2([&](Element x, Element y) {
        return !l.leq(x, y) || l.join(x, l.meet(neg[x], y)) == y;
      });
      if (om) out.insert(NegationClass::orthomodular);
    }
  }

  // Consequences of each class.
  if (out.contains(NegationClass::intuitionistic) && !out.contains(NegationClass::fuzzy))
    throw std::logic_error("intuitionistic negation is not fuzzy");
  if (out.contains(NegationClass::fuzzy) && neg[zero] != one)
    throw std::logic_error("fuzzy negation does not send 0 to 1");
  const bool ok_minimal = forall2([&](Element x, Element y) {
    return l.leq(l.join(neg[x], neg[y]), neg[l.meet(x, y)]) &&
           neg[l.join(x, y)] == l.meet(neg[x], neg[y]) && neg[x] == neg[neg[neg[x]]];
  });
  if (!ok_minimal) throw std::logic_error("minimal negation breaks its De Morgan laws");
  if (out.contains(NegationClass::de_morgan)) {
    const bool ok = forall2([&](Element x, Element y) {
      return neg[l.meet(x, y)] == l.join(neg[x], neg[y]) &&
             (l.leq(x, y) == l.leq(neg[y], neg[x]));
    });
    if (!ok) throw std::logic_error("De Morgan negation breaks a De Morgan law");
  }
  if (out.contains(NegationClass::ortho)) {
    const bool ok = neg[zero] == one && neg[one] == zero &&
                    forall([&](Element x) { return l.join(x, neg[x]) == one; });
    if (!ok) throw std::logic_error("ortho negation is not a complement");
  }
  return out;
}

}  // namespace primlat
