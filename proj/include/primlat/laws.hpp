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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "primlat/classify.hpp"
#include "primlat/ortho.hpp"

/// Exhaustive checks of lattice and orthocomplement laws. Each check
/// returns the first counterexample it meets, or nothing.
namespace primlat::laws {

struct LawFailure {
  std::string law;
  std::vector<Element> witness;
};
using LawResult = std::optional<LawFailure>;

namespace detail {

template <typename F>
LawResult forall1(std::size_t n, const char* law, F f) {
  for (Element x = 0; x < n; ++x)
    if (!f(x)) return LawFailure{law, {x}};
  return std::nullopt;
}
template <typename F>
LawResult forall2(std::size_t n, const char* law, F f) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!f(x, y)) return LawFailure{law, {x, y}};
  return std::nullopt;
}
template <typename F>
LawResult forall3(std::size_t n, const char* law, F f) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!f(x, y, z)) return LawFailure{law, {x, y, z}};
  return std::nullopt;
}
inline LawResult first(std::initializer_list<LawResult> rs) {
  for (const auto& r : rs)
    if (r) return r;
  return std::nullopt;
}

}  // namespace detail

/// Idempotent, commutative, associative and absorptive laws for both operations.
inline LawResult lattice_identities(const FiniteLattice& l) {
  const auto n = l.size();
  auto J = [&](Element a, Element b) { return l.join(a, b); };
  auto M = [&](Element a, Element b) { return l.meet(a, b); };
  return detail::first({
      detail::forall1(n, "join idempotent", [&](Element x) { return J(x, x) == x; }),
      detail::forall1(n, "meet idempotent", [&](Element x) { return M(x, x) == x; }),
      detail::forall2(n, "join commutative", [&](Element x, Element y) { return J(x, y) == J(y, x); }),
      detail::forall2(n, "meet commutative", [&](Element x, Element y) { return M(x, y) == M(y, x); }),
      detail::forall3(n, "join associative",
                      [&](Element x, Element y, Element z) { return J(J(x, y), z) == J(x, J(y, z)); }),
      detail::forall3(n, "meet associative",
                      [&](Element x, Element y, Element z) { return M(M(x, y), z) == M(x, M(y, z)); }),
      detail::forall2(n, "join absorptive", [&](Element x, Element y) { return J(x, M(x, y)) == x; }),
      detail::forall2(n, "meet absorptive", [&](Element x, Element y) { return M(x, J(x, y)) == x; }),
  });
}

/// Commutative, associative, absorptive (no idempotence), one operation at a
/// time; either half alone characterizes lattices.
inline LawResult reduced_lattice_axioms(const FiniteLattice& l) {
  const auto n = l.size();
  auto J = [&](Element a, Element b) { return l.join(a, b); };
  auto M = [&](Element a, Element b) { return l.meet(a, b); };
  return detail::first({
      detail::forall2(n, "join commutative", [&](Element x, Element y) { return J(x, y) == J(y, x); }),
      detail::forall3(n, "join associative",
                      [&](Element x, Element y, Element z) { return J(J(x, y), z) == J(x, J(y, z)); }),
      detail::forall2(n, "join absorptive", [&](Element x, Element y) { return J(x, M(x, y)) == x; }),
      detail::forall2(n, "meet commutative", [&](Element x, Element y) { return M(x, y) == M(y, x); }),
      detail::forall3(n, "meet associative",
                      [&](Element x, Element y, Element z) { return M(M(x, y), z) == M(x, M(y, z)); }),
      detail::forall2(n, "meet absorptive", [&](Element x, Element y) { return M(x, J(x, y)) == x; }),
  });
}

/// a <= b and x <= y imply a ^ x <= b ^ y and a v x <= b v y.
inline LawResult monotony(const FiniteLattice& l) {
  const auto n = l.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          if (!l.leq(x, y)) continue;
          if (!l.leq(l.meet(a, x), l.meet(b, y)) || !l.leq(l.join(a, x), l.join(b, y)))
            return LawFailure{"monotony", {a, b, x, y}};
        }
    }
  return std::nullopt;
}

/// A subset of B implies join A <= join B and meet A >= meet B, over all
/// subset pairs (lattices up to 12 elements).
inline LawResult subset_monotony(const FiniteLattice& l) {
  const auto n = l.size();
  if (n > 12) throw LimitExceeded("subset monotony check is limited to 12 elements");
  auto members = [&](std::uint32_t s) {
    std::vector<Element> v;
    for (Element x = 0; x < n; ++x)
      if (s >> x & 1u) v.push_back(x);
    return v;
  };
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t b = 0; b <= full; ++b) {
    auto B = members(b);
    const Element jb = l.join_all(B), mb = l.meet_all(B);
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      auto A = members(a);
      if (!l.leq(l.join_all(A), jb)) return LawFailure{"join of subset below", A};
      if (!l.leq(mb, l.meet_all(A))) return LawFailure{"meet of subset above", A};
      if (a == 0) break;
    }
  }
  return std::nullopt;
}

/// Maxmini <= minimax for every 2x2, 2x3 and 3x2 matrix of elements.
inline LawResult minimax(const FiniteLattice& l) {
  const auto n = l.size();
  for (auto [rows, cols] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    const unsigned cells = rows * cols;
    std::vector<Element> m(cells, 0);
    while (true) {
      Element maxmini = l.bottom(), minimax_ = l.top();
      for (unsigned i = 0; i < rows; ++i) {
        Element row = l.top();
        for (unsigned j = 0; j < cols; ++j) row = l.meet(row, m[i * cols + j]);
        maxmini = l.join(maxmini, row);
      }
      for (unsigned j = 0; j < cols; ++j) {
        Element col = l.bottom();
        for (unsigned i = 0; i < rows; ++i) col = l.join(col, m[i * cols + j]);
        minimax_ = l.meet(minimax_, col);
      }
      if (!l.leq(maxmini, minimax_)) return LawFailure{"minimax inequality", m};
      unsigned k = 0;
      while (k < cells && ++m[k] == n) m[k++] = 0;
      if (k == cells) break;
    }
  }
  return std::nullopt;
}

/// Join super-distributive, meet sub-distributive and median inequalities.
inline LawResult distributive_inequalities(const FiniteLattice& l) {
  auto J = [&](Element a, Element b) { return l.join(a, b); };
  auto M = [&](Element a, Element b) { return l.meet(a, b); };
  return detail::first({
      detail::forall3(l.size(), "join super-distributive",
                      [&](Element x, Element y, Element z) {
                        return l.leq(J(M(x, y), M(x, z)), M(x, J(y, z)));
                      }),
      detail::forall3(l.size(), "meet sub-distributive",
                      [&](Element x, Element y, Element z) {
                        return l.leq(J(x, M(y, z)), M(J(x, y), J(x, z)));
                      }),
      detail::forall3(l.size(), "median inequality",
                      [&](Element x, Element y, Element z) {
                        return l.leq(J(J(M(x, y), M(x, z)), M(y, z)), M(M(J(x, y), J(x, z)), J(y, z)));
                      }),
  });
}

/// x <= y implies x v (y ^ z) <= y ^ (x v z).
inline LawResult modular_inequality(const FiniteLattice& l) {
  return detail::forall3(l.size(), "modular inequality", [&](Element x, Element y, Element z) {
    return !l.leq(x, y) || l.leq(l.join(x, l.meet(y, z)), l.meet(y, l.join(x, z)));
  });
}

/// x v 1 = 1, x ^ 0 = 0, x v 0 = x, x ^ 1 = x.
inline LawResult bound_identities(const FiniteLattice& l) {
  const Element o = l.bottom(), i = l.top();
  return detail::forall1(l.size(), "bound identities", [&](Element x) {
    return l.join(x, i) == i && l.meet(x, o) == o && l.join(x, o) == x && l.meet(x, i) == x;
  });
}

// Predicates that must agree with the classification.

inline bool disjunctive_distributive(const FiniteLattice& l) {
  return !detail::forall3(l.size(), "", [&](Element x, Element y, Element z) {
    return l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
  });
}
inline bool conjunctive_distributive(const FiniteLattice& l) {
  return !detail::forall3(l.size(), "", [&](Element x, Element y, Element z) {
    return l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z));
  });
}
inline bool median_property(const FiniteLattice& l) {
  return !detail::forall3(l.size(), "", [&](Element x, Element y, Element z) {
    return l.meet(l.meet(l.join(x, y), l.join(x, z)), l.join(y, z)) ==
           l.join(l.join(l.meet(x, y), l.meet(x, z)), l.meet(y, z));
  });
}

/// The three equivalent modular forms: x <= y gives x v (z ^ y) = (x v z) ^ y;
/// x v ((x v y) ^ z) = (x v y) ^ (x v z); x ^ ((x ^ y) v z) = (x ^ y) v (x ^ z).
inline std::array<bool, 3> modular_forms(const FiniteLattice& l) {
  auto J = [&](Element a, Element b) { return l.join(a, b); };
  auto M = [&](Element a, Element b) { return l.meet(a, b); };
  const auto n = l.size();
  return {
      !detail::forall3(n, "", [&](Element x, Element y, Element z) {
        return !l.leq(x, y) || J(x, M(z, y)) == M(J(x, z), y);
      }),
      !detail::forall3(n, "", [&](Element x, Element y, Element z) {
        return J(x, M(J(x, y), z)) == M(J(x, y), J(x, z));
      }),
      !detail::forall3(n, "", [&](Element x, Element y, Element z) {
        return M(x, J(M(x, y), z)) == J(M(x, y), M(x, z));
      }),
  };
}

/// Two-identity axiomatization of modular lattices:
/// (x ^ y) v (x ^ z) = ((z ^ x) v y) ^ x and (x v (y v z)) ^ z = z.
inline bool modular_by_identities(const FiniteLattice& l) {
  return !detail::forall3(l.size(), "", [&](Element x, Element y, Element z) {
    return l.join(l.meet(x, y), l.meet(x, z)) == l.meet(l.join(l.meet(z, x), y), x) &&
           l.meet(l.join(x, l.join(y, z)), z) == z;
  });
}

/// In a distributive lattice x v a = x v b and x ^ a = x ^ b force a = b.
inline LawResult cancellation(const FiniteLattice& l) {
  return detail::forall3(l.size(), "cancellation", [&](Element x, Element a, Element b) {
    return !(l.join(x, a) == l.join(x, b) && l.meet(x, a) == l.meet(x, b)) || a == b;
  });
}

/// Complement maps: one chosen complement per element, all combinations.
inline std::vector<std::vector<Element>> complement_selections(const FiniteLattice& l,
                                                               std::size_t limit = 100000) {
  std::vector<std::vector<Element>> choices(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    choices[x] = complements_of(l, x);
    if (choices[x].empty()) return {};
  }
  std::vector<std::vector<Element>> out;
  std::vector<Element> cur(l.size());
  auto walk = [&](auto&& self, Element x) -> void {
    if (out.size() >= limit) return;
    if (x == l.size()) {
      out.push_back(cur);
      return;
    }
    for (Element c : choices[x]) {
      cur[x] = c;
      self(self, x + 1);
    }
  };
  walk(walk, 0);
  return out;
}

/// The ten classic Boolean properties with x' given by `comp`.
inline LawResult classic_ten(const FiniteLattice& l, const std::vector<Element>& comp) {
  const auto n = l.size();
  auto J = [&](Element a, Element b) { return l.join(a, b); };
  auto M = [&](Element a, Element b) { return l.meet(a, b); };
  const Element o = l.bottom(), i = l.top();
  if (auto r = lattice_identities(l)) return r;
  if (auto r = bound_identities(l)) return r;
  return detail::first({
      detail::forall3(n, "distributive",
                      [&](Element x, Element y, Element z) {
                        return J(x, M(y, z)) == M(J(x, y), J(x, z)) &&
                               M(x, J(y, z)) == J(M(x, y), M(x, z));
                      }),
      detail::forall1(n, "complemented",
                      [&](Element x) { return J(x, comp[x]) == i && M(x, comp[x]) == o; }),
      detail::forall2(n, "de Morgan",
                      [&](Element x, Element y) {
                        return comp[J(x, y)] == M(comp[x], comp[y]) &&
                               comp[M(x, y)] == J(comp[x], comp[y]);
                      }),
      detail::forall1(n, "involutory", [&](Element x) { return comp[comp[x]] == x; }),
  });
}

/// Some choice of complements satisfies all ten properties.
inline bool classic_ten_holds(const FiniteLattice& l) {
  for (const auto& comp : complement_selections(l))
    if (!classic_ten(l, comp)) return true;
  return false;
}

/// Some unary operation ' satisfies (x' v y')' v (x' v y)' = x, searched
/// exhaustively (lattices up to 7 elements).
inline std::optional<std::vector<Element>> huntington_operation(const FiniteLattice& l) {
  const auto n = l.size();
  if (n > 7) throw LimitExceeded("Huntington search is limited to 7 elements");
  if (n == 0) return std::vector<Element>{};
  std::vector<Element> op(n, 0);
  while (true) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        ok = l.join(op[l.join(op[x], op[y])], op[l.join(op[x], y)]) == x;
    if (ok) return op;
    std::size_t k = 0;
    while (k < n && ++op[k] == n) op[k++] = 0;
    if (k == n) return std::nullopt;
  }
}

// Orthocomplemented lattices.

/// x <= y implies x' v y = 1 and x ^ y' = 0.
inline LawResult order_complement_bounds(const OrthoLattice& o) {
  return detail::forall2(o.size(), "x <= y gives x' v y = 1 and x ^ y' = 0", [&](Element x, Element y) {
    return !o.leq(x, y) ||
           (o.join(o.perp(x), y) == o.top() && o.meet(x, o.perp(y)) == o.bottom());
  });
}

/// Orthogonality is symmetric; orthogonal pairs are disjoint with co-joins 1.
inline LawResult orthogonality_facts(const OrthoLattice& o) {
  return detail::first({
      detail::forall2(o.size(), "orthogonality symmetric",
                      [&](Element x, Element y) { return !orthogonal(o, x, y) || orthogonal(o, y, x); }),
      detail::forall2(o.size(), "orthogonal pair disjoint",
                      [&](Element x, Element y) {
                        return !orthogonal(o, x, y) ||
                               (o.meet(x, y) == o.bottom() && o.join(o.perp(x), o.perp(y)) == o.top());
                      }),
  });
}

/// x, y, z with x orthogonal to y, y to z, but not x to z, if any.
inline std::optional<std::array<Element, 3>> orthogonality_intransitive(const OrthoLattice& o) {
  for (Element x = 0; x < o.size(); ++x)
    for (Element y = 0; y < o.size(); ++y)
      for (Element z = 0; z < o.size(); ++z)
        if (orthogonal(o, x, y) && orthogonal(o, y, z) && !orthogonal(o, x, z))
          return std::array<Element, 3>{x, y, z};
  return std::nullopt;
}

/// Commuting with 0, 1, itself; x commutes with y iff with y'; order and
/// orthogonality imply commuting.
inline LawResult commute_facts(const OrthoLattice& o) {
  const Element z = o.bottom(), i = o.top();
  return detail::first({
      detail::forall1(o.size(), "commutes with bounds and itself",
                      [&](Element x) {
                        return commutes(o, x, z) && commutes(o, z, x) && commutes(o, x, i) &&
                               commutes(o, i, x) && commutes(o, x, x);
                      }),
      detail::forall2(o.size(), "x commutes with y iff with y'",
                      [&](Element x, Element y) { return commutes(o, x, y) == commutes(o, x, o.perp(y)); }),
      detail::forall2(o.size(), "x <= y implies x commutes with y",
                      [&](Element x, Element y) { return !o.leq(x, y) || commutes(o, x, y); }),
      detail::forall2(o.size(), "orthogonal implies commutes",
                      [&](Element x, Element y) { return !orthogonal(o, x, y) || commutes(o, x, y); }),
  });
}

/// Five lattice-wide forms expected to agree: commuting is symmetric, the
/// orthomodular identity, x = phi_y(x) below y, and the two absorbing forms.
inline std::array<bool, 5> symmetry_forms(const OrthoLattice& o) {
  const auto n = o.size();
  auto J = [&](Element a, Element b) { return o.join(a, b); };
  auto M = [&](Element a, Element b) { return o.meet(a, b); };
  auto P = [&](Element a) { return o.perp(a); };
  return {
      !detail::forall2(n, "", [&](Element x, Element y) { return !commutes(o, x, y) || commutes(o, y, x); }),
      !detail::forall2(n, "", [&](Element x, Element y) { return !o.leq(x, y) || y == J(x, M(P(x), y)); }),
      !detail::forall2(n, "", [&](Element x, Element y) { return !o.leq(x, y) || x == M(y, J(x, P(y))); }),
      !detail::forall2(n, "", [&](Element x, Element y) { return y == J(M(x, y), M(y, P(M(x, y)))); }),
      !detail::forall2(n, "", [&](Element x, Element y) { return x == M(J(x, y), J(x, P(J(x, y)))); }),
  };
}

/// In orthomodular lattices: x commutes with y iff phi_x(y) = phi_y(x) = x ^ y.
inline LawResult orthomodular_commute_sasaki(const OrthoLattice& o) {
  return detail::forall2(o.size(), "commutes iff Sasaki projections meet", [&](Element x, Element y) {
    const bool rhs = sasaki(o, x, y) == o.meet(x, y) && sasaki(o, y, x) == o.meet(x, y);
    return commutes(o, x, y) == rhs;
  });
}

/// x <= y: phi_x(y) = x. y <= x: y <= phi_x(y) <= x, equal to y when Boolean.
inline LawResult sasaki_order_cases(const OrthoLattice& o, bool boolean) {
  return detail::forall2(o.size(), "Sasaki order cases", [&](Element x, Element y) {
    const Element s = sasaki(o, x, y);
    if (o.leq(x, y) && s != x) return false;
    if (o.leq(y, x) && !(o.leq(y, s) && o.leq(s, x))) return false;
    if (boolean && o.leq(y, x) && s != y) return false;
    return true;
  });
}

/// phi_0(y) = 0, phi_x(0) = 0, phi_1(y) = y, phi_x(1) = x, phi_x(x') = 0.
inline LawResult sasaki_special_values(const OrthoLattice& o) {
  const Element z = o.bottom(), i = o.top();
  return detail::forall2(o.size(), "Sasaki special values", [&](Element x, Element y) {
    return sasaki(o, z, y) == z && sasaki(o, x, z) == z && sasaki(o, i, y) == y &&
           sasaki(o, x, i) == x && sasaki(o, x, o.perp(x)) == z;
  });
}

/// Splitting at c agrees with "every x commutes with c".
inline LawResult splitting_criterion(const OrthoLattice& o) {
  return detail::forall1(o.size(), "splits at c iff all x commute with c",
                         [&](Element c) { return splits_at(o, c) == commuted_by_all(o, c); });
}

}  // namespace primlat::laws
