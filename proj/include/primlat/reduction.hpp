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
#include <stdexcept>
#include <vector>

#include "primlat/level.hpp"

namespace primlat {

/// Largest parent rank searched exhaustively; rank 6 needs best_effort.
inline constexpr unsigned kExactReduceRank = 5;
inline constexpr unsigned kMaxReduceRank = 6;

struct ReduceOptions {
  bool best_effort = false;
};

struct ReduceCensus {
  std::size_t candidates = 0;  // pair selections tried
  std::vector<Level> accepted;
};

namespace detail {

struct PairSpace {
  Mask top = 0;
  unsigned rank = 0;
  std::size_t choose = 0;      // pairs to keep
  std::vector<Mask> lows;      // one representative per complement pair
};

inline PairSpace pair_space(const Level& parent) {
  if (!is_complement_closed_boolean(parent.carrier()))
    throw PreconditionError("reduce needs a Boolean level closed under set complement");
  PairSpace s;
  s.top = *parent.top();
  s.rank = static_cast<unsigned>(std::countr_zero(parent.size()));
  if (s.rank < 2) throw PreconditionError("reduce needs a Boolean level of rank at least 2");
  s.choose = (std::size_t{1} << (s.rank - 2)) - 1;
  for (Mask m : parent.carrier())
    if (m != 0 && m != s.top && m < (s.top & ~m)) s.lows.push_back(m);
  return s;
}

inline std::vector<Mask> carrier_from(const PairSpace& s, const std::vector<std::size_t>& pick) {
  std::vector<Mask> c{0, s.top};
  for (auto i : pick) {
    c.push_back(s.lows[i]);
    c.push_back(s.top & ~s.lows[i]);
  }
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace detail

/// Every choice of complement pairs, each tested for an induced Boolean
/// order whose complements are the parent's. Exposes the number tried.
inline ReduceCensus reduce_census(const Level& parent) {
  auto s = detail::pair_space(parent);
  if (s.rank > kExactReduceRank)
    throw LimitExceeded("pair-selection census is limited to rank " +
                        std::to_string(kExactReduceRank));
  ReduceCensus out;
  std::vector<std::size_t> pick;
  auto walk = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == s.choose) {
      ++out.candidates;
      auto c = detail::carrier_from(s, pick);
      if (is_complement_closed_boolean(c)) out.accepted.emplace_back(parent.atoms(), std::move(c));
      return;
    }
    for (std::size_t i = from; i + (s.choose - pick.size()) <= s.lows.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(out.accepted.begin(), out.accepted.end());
  return out;
}

namespace detail {

// Search anchored on atoms. In a member of the reduction the atoms are
// pairwise disjoint, and the element for an atom set S is the union of those
// atoms plus r(S), a part of the leftover bits R. r is monotone, vanishes on
// singletons and satisfies r(complement of S) = R minus r(S). Every such
// choice whose elements all lie in the parent is a member, and vice versa.
inline std::vector<Level> reduce_by_atoms(const Level& parent, const PairSpace& s) {
  const unsigned k = s.rank - 1;
  std::vector<Level> out;
  if (k == 1) {
    out.emplace_back(parent.atoms(), std::vector<Mask>{0, s.top});
    return out;
  }
  std::vector<Mask> proper;
  for (Mask m : parent.carrier())
    if (m != 0 && m != s.top) proper.push_back(m);

  const std::size_t subsets = std::size_t{1} << k;
  const std::uint32_t all = static_cast<std::uint32_t>(subsets - 1);
  // Sets S with 2 <= |S| <= k-2 and S below its complement numerically; the
  // complement is assigned together with S.
  std::vector<std::uint32_t> free_sets;
  for (std::uint32_t S = 0; S < subsets; ++S) {
    int c = std::popcount(S);
    if (c >= 2 && c <= static_cast<int>(k) - 2 && S < (all & ~S)) free_sets.push_back(S);
  }
  std::stable_sort(free_sets.begin(), free_sets.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::vector<Mask> atoms;
  auto emit_for_atoms = [&]() {
    Mask covered = 0;
    for (Mask a : atoms) covered |= a;
    const Mask R = s.top & ~covered;
    // With two atoms each singleton is also a co-singleton, forcing R empty.
    if (k == 2 && R != 0) return;
    std::vector<Mask> base(subsets, 0);
    for (std::uint32_t S = 0; S < subsets; ++S)
      for (unsigned i = 0; i < k; ++i)
        if (S >> i & 1u) base[S] |= atoms[i];
    std::vector<Mask> r(subsets, 0);
    std::vector<char> fixed(subsets, 0);
    fixed[0] = 1;
    fixed[all] = 1;
    r[all] = R;
    for (unsigned i = 0; i < k; ++i) {
      fixed[1u << i] = 1;
      fixed[all & ~(1u << i)] = 1;
      r[all & ~(1u << i)] = R;
    }
    for (std::uint32_t S = 0; S < subsets; ++S)
      if (fixed[S] && !parent.contains(base[S] | r[S])) return;
    auto monotone_at = [&](std::uint32_t S) {
      for (std::uint32_t T = 0; T < subsets; ++T) {
        if (!fixed[T] || T == S) continue;
        if ((S & ~T) == 0 && (r[S] & ~r[T]) != 0) return false;
        if ((T & ~S) == 0 && (r[T] & ~r[S]) != 0) return false;
      }
      return true;
    };
    auto assign = [&](auto&& self, std::size_t idx) -> void {
      if (idx == free_sets.size()) {
        std::vector<Mask> c(subsets);
        for (std::uint32_t S = 0; S < subsets; ++S) c[S] = base[S] | r[S];
        out.emplace_back(parent.atoms(), std::move(c));
        return;
      }
      const std::uint32_t S = free_sets[idx], Sc = all & ~S;
      // Enumerate every sub-mask of R for r(S).
      for (Mask v = R;; v = (v - 1) & R) {
        r[S] = v;
        r[Sc] = R & ~v;
        if (parent.contains(base[S] | r[S]) && parent.contains(base[Sc] | r[Sc])) {
          fixed[S] = fixed[Sc] = 1;
          if (monotone_at(S) && monotone_at(Sc)) self(self, idx + 1);
          fixed[S] = fixed[Sc] = 0;
        }
        if (v == 0) break;
      }
      r[S] = r[Sc] = 0;
    };
    assign(assign, 0);
  };
  auto pick_atoms = [&](auto&& self, std::size_t from, Mask used) -> void {
    if (atoms.size() == k) {
      emit_for_atoms();
      return;
    }
    for (std::size_t i = from; i < proper.size(); ++i) {
      if ((proper[i] & used) != 0) continue;
      atoms.push_back(proper[i]);
      self(self, i + 1, used | proper[i]);
      atoms.pop_back();
    }
  };
  pick_atoms(pick_atoms, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// The reduction of a Boolean level: all half-size sub-carriers containing
/// the bounds that are Boolean under the inherited inclusion order and whose
/// complement pairs are the parent's. Sorted by canonical carrier encoding.
inline std::vector<Level> reduce(const Level& parent, const ReduceOptions& opt = {}) {
  auto s = detail::pair_space(parent);
  if (s.rank <= kExactReduceRank) return reduce_census(parent).accepted;
  if (s.rank > kMaxReduceRank)
    throw LimitExceeded("reduce supports parents up to rank " + std::to_string(kMaxReduceRank));
  if (!opt.best_effort)
    throw LimitExceeded("reduce beyond rank " + std::to_string(kExactReduceRank) +
                        " requires the best-effort flag");
  return detail::reduce_by_atoms(parent, s);
}

}  // namespace primlat
