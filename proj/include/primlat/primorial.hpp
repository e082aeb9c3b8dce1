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

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primlat/classify.hpp"
#include "primlat/dposet.hpp"
#include "primlat/level.hpp"
#include "primlat/reduction.hpp"

namespace primlat {

/// Bounded-lattice difference: (X \ Y) plus the shared bounds, induced order.
/// When y is a member of reduce(x) the result is checked to be
/// orthocomplemented by set complement.
inline Level difference(const Level& x, const Level& y) {
  if (x.atoms() != y.atoms()) throw PreconditionError("levels live over different atom sets");
  auto x0 = x.bottom(), x1 = x.top(), y0 = y.bottom(), y1 = y.top();
  if (!x0 || !x1 || !y0 || !y1) throw PreconditionError("difference needs bounded levels");
  if (*x0 != *y0 || *x1 != *y1) throw PreconditionError("levels do not share their bounds");
  std::vector<Mask> c;
  for (Mask m : x.carrier())
    if (!y.contains(m)) c.push_back(m);
  c.push_back(*x0);
  c.push_back(*x1);
  Level out(x.atoms(), std::move(c));
  const bool reduction_member = y.subset_of(x) && y.size() * 2 == x.size() && *x0 == 0 &&
                                is_complement_closed_boolean(x.carrier()) &&
                                is_complement_closed_boolean(y.carrier());
  if (reduction_member) {
    try {
      inherited_ortho(out);
    } catch (const Error& e) {
      throw std::logic_error(std::string("difference of a reduction is not orthocomplemented: ") +
                             e.what());
    }
  }
  return out;
}

/// A member of a primorial family: the Boolean level L2^n or the difference D_n.
struct LevelRef {
  enum class Kind { boolean, difference };
  Kind kind = Kind::boolean;
  unsigned n = 1;

  std::string name() const {
    return kind == Kind::boolean ? "L2^" + std::to_string(n) : "D" + std::to_string(n);
  }

  /// Accepts "L2^3", "L3", "D4".
  static LevelRef parse(const std::string& s) {
    auto num = [&](std::size_t from) -> unsigned {
      if (from >= s.size()) throw PreconditionError("bad level name '" + s + "'");
      unsigned v = 0;
      for (std::size_t i = from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw PreconditionError("bad level name '" + s + "'");
        v = v * 10 + static_cast<unsigned>(s[i] - '0');
        if (v > 64) throw PreconditionError("bad level name '" + s + "'");
      }
      return v;
    };
    if (s.rfind("L2^", 0) == 0) return {Kind::boolean, num(3)};
    if (s.rfind("L", 0) == 0) return {Kind::boolean, num(1)};
    if (s.rfind("D", 0) == 0) return {Kind::difference, num(1)};
    throw PreconditionError("bad level name '" + s + "'");
  }

  friend bool operator==(const LevelRef&, const LevelRef&) = default;
};

/// Roles of a primorial lattice: y[0] and x[0..K] are the atoms and
/// y[n+1] = y[n] v x[n]; y.back() is the top.
struct PrimorialRoles {
  Element zero = 0;
  std::vector<Element> y;
  std::vector<Element> x;
};

/// Searches for a role assignment. Elements are tried in index order, so the
/// reported assignment is deterministic.
inline std::optional<PrimorialRoles> is_primorial(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  if (!is_atomic(l)) return std::nullopt;
  auto at = atoms(l);
  const std::size_t x_count = n / 2 - 1;  // K + 1
  if (at.size() != x_count + 1) return std::nullopt;
  PrimorialRoles roles;
  roles.zero = l.bottom();
  std::vector<char> used(n, 0);
  used[roles.zero] = 1;
  auto extend = [&](auto&& self) -> bool {
    if (roles.x.size() == x_count) {
      for (Element e = 0; e < n; ++e)
        if (!used[e]) return false;
      return true;
    }
    const Element yk = roles.y.back();
    for (Element a : at) {
      if (used[a]) continue;
      Element next = l.join(yk, a);
      if (used[next]) continue;
      used[a] = used[next] = 1;
      roles.x.push_back(a);
      roles.y.push_back(next);
      if (self(self)) return true;
      roles.x.pop_back();
      roles.y.pop_back();
      used[a] = used[next] = 0;
    }
    return false;
  };
  for (Element y0 : at) {
    used[y0] = 1;
    roles.y = {y0};
    roles.x.clear();
    if (extend(extend)) return roles;
    used[y0] = 0;
  }
  return std::nullopt;
}

/// Chooses a member of reduce() for the level below a given rank.
struct PrimorialStrategy {
  std::function<std::size_t(unsigned rank, const std::vector<Level>& candidates)> choose;

  /// Lexicographically least carrier at every level.
  static PrimorialStrategy canonical_first() {
    return {[](unsigned, const std::vector<Level>&) { return std::size_t{0}; }};
  }

  /// Carriers keyed by the rank of the chosen level; other ranks fall back
  /// to canonical-first. A carrier that is not a candidate is an error.
  static PrimorialStrategy explicit_carriers(std::map<unsigned, std::vector<Mask>> carriers) {
    return {[carriers = std::move(carriers)](unsigned rank, const std::vector<Level>& cands) {
      auto it = carriers.find(rank - 1);
      if (it == carriers.end()) return std::size_t{0};
      auto want = it->second;
      std::sort(want.begin(), want.end());
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (cands[i].carrier() == want) return i;
      throw PreconditionError("choice for L2^" + std::to_string(rank - 1) +
                              " is not a member of the reduction of L2^" + std::to_string(rank));
    }};
  }

  /// First candidate satisfying a predicate, canonical-first otherwise.
  static PrimorialStrategy first_matching(unsigned rank_of_choice,
                                          std::function<bool(const Level&)> pred) {
    return {[rank_of_choice, pred = std::move(pred)](unsigned rank,
                                                     const std::vector<Level>& cands) {
      if (rank - 1 != rank_of_choice) return std::size_t{0};
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (pred(cands[i])) return i;
      throw PreconditionError("no member of the reduction of L2^" + std::to_string(rank) +
                              " matches the requested shape");
    }};
  }
};

/// The family {L2^1 .. L2^N} together with the differences D_n = L2^n minus L2^(n-1).
class PrimorialLattice {
 public:
  PrimorialLattice(unsigned top_n, std::vector<Level> chain, std::vector<Level> diffs)
      : top_n_(top_n), chain_(std::move(chain)), diffs_(std::move(diffs)) {
    build_family();
  }

  unsigned top_n() const noexcept { return top_n_; }
  const std::vector<Level>& chain() const noexcept { return chain_; }
  const std::vector<Level>& diffs() const noexcept { return diffs_; }

  const Level& boolean_level(unsigned n) const {
    if (n < 1 || n > top_n_) throw PreconditionError("no Boolean level L2^" + std::to_string(n));
    return chain_[n - 1];
  }
  const Level& difference_level(unsigned n) const {
    if (n < 2 || n > top_n_) throw PreconditionError("no difference level D" + std::to_string(n));
    return diffs_[n - 2];
  }
  const Level& level(const LevelRef& r) const {
    return r.kind == LevelRef::Kind::boolean ? boolean_level(r.n) : difference_level(r.n);
  }
  const Level& top() const { return chain_.back(); }

  /// Distinct family members (D2 coincides with L2^2 and is omitted).
  const std::vector<LevelRef>& members() const noexcept { return members_; }

  /// Members ordered by carrier inclusion.
  const FiniteLattice& family() const { return family_; }

  /// One line per member: "<name>: <carrier literals>".
  std::string serialize() const {
    std::string s;
    for (const auto& m : members_) s += m.name() + ": " + level(m).literal() + "\n";
    return s;
  }

 private:
  void build_family() {
    for (unsigned n = 1; n <= top_n_; ++n) members_.push_back({LevelRef::Kind::boolean, n});
    for (unsigned n = 3; n <= top_n_; ++n) members_.push_back({LevelRef::Kind::difference, n});
    std::vector<std::string> labels;
    for (const auto& m : members_) labels.push_back(m.name());
    Relation r(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = 0; j < members_.size(); ++j)
        if (level(members_[i]).subset_of(level(members_[j]))) r.set(i, j);
    auto l = FiniteLattice::from_poset(FinitePoset::from_order(std::move(labels), std::move(r)));
    if (!l) throw std::logic_error("primorial family is not a lattice");
    family_ = std::move(*l);
  }

  unsigned top_n_;
  std::vector<Level> chain_;
  std::vector<Level> diffs_;
  std::vector<LevelRef> members_;
  FiniteLattice family_;
};

/// Expected roles: 0 = L2^1, y0 = L2^2, x_k = D_(k+3), y_(k+1) = L2^(k+3).
inline void check_primorial_invariants(const PrimorialLattice& p) {
  const auto& f = p.family();
  for (unsigned n = 2; n <= p.top_n(); ++n)
    if (!p.difference_level(n).is_lattice()) throw std::logic_error("difference level is not a lattice");
  auto idx = [&](const LevelRef& r) { return f.index_of(r.name()); };
  using K = LevelRef::Kind;
  if (f.bottom() != idx({K::boolean, 1})) throw std::logic_error("L2^1 is not the least member");
  if (p.top_n() >= 2) {
    auto at = atoms(f);
    std::vector<Element> want{idx({K::boolean, 2})};
    for (unsigned n = 3; n <= p.top_n(); ++n) want.push_back(idx({K::difference, n}));
    std::sort(at.begin(), at.end());
    std::sort(want.begin(), want.end());
    if (at != want) throw std::logic_error("family atoms are not L2^2 and the differences");
    for (unsigned n = 2; n < p.top_n(); ++n)
      if (f.join(idx({K::boolean, n}), idx({K::difference, n + 1})) != idx({K::boolean, n + 1}))
        throw std::logic_error("L2^(n+1) is not the join of L2^n and D_(n+1)");
  }
  if (!is_primorial(f)) throw std::logic_error("family is not primorial");
}

/// Reduction choices, one line per chosen level: "<rank> {..} {..} ...".
/// The literals are the carrier of L2^rank over N atoms.
inline std::map<unsigned, std::vector<Mask>> read_choices(std::istream& in, unsigned atoms) {
  std::map<unsigned, std::vector<Mask>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::size_t j = i;
    unsigned rank = 0;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9' && rank <= kMaxAtoms)
      rank = rank * 10 + static_cast<unsigned>(line[j++] - '0');
    if (j == i) throw ParseError("expected a rank", lineno, i + 1);
    if (rank < 1 || rank >= atoms) throw ParseError("rank must be in 1.." + std::to_string(atoms - 1), lineno, i + 1);
    if (out.count(rank)) throw ParseError("rank " + std::to_string(rank) + " chosen twice", lineno, i + 1);
    auto carrier = subset_literals_in_line(line, j, atoms, lineno);
    if (carrier.size() != (std::size_t{1} << rank))
      throw ParseError("L2^" + std::to_string(rank) + " needs " + std::to_string(1u << rank) +
                           " subsets, got " + std::to_string(carrier.size()),
                       lineno, i + 1);
    out.emplace(rank, std::move(carrier));
  }
  return out;
}

/// Builds the family generated by L2^N, choosing one reduction member per level.
inline PrimorialLattice generate_primorial(unsigned N,
                                           const PrimorialStrategy& strategy = PrimorialStrategy::canonical_first(),
                                           const ReduceOptions& opt = {}) {
  if (N < 2) throw PreconditionError("a primorial family needs N >= 2");
  if (N > kMaxReduceRank) throw LimitExceeded("generation is limited to N <= 6");
  std::vector<Level> chain(N);
  chain[N - 1] = Level::boolean(N);
  for (unsigned rank = N; rank >= 2; --rank) {
    auto cands = reduce(chain[rank - 1], opt);
    std::size_t i = strategy.choose(rank, cands);
    if (i >= cands.size()) throw PreconditionError("strategy chose a missing candidate");
    chain[rank - 2] = cands[i];
  }
  std::vector<Level> diffs;
  for (unsigned n = 2; n <= N; ++n) diffs.push_back(difference(chain[n - 1], chain[n - 2]));
  PrimorialLattice p(N, std::move(chain), std::move(diffs));
  check_primorial_invariants(p);
  return p;
}

/// Difference-poset laws over the Boolean chain of the family with the
/// bounded-lattice difference; witnesses index the chain (0 is L2^1).
inline DPosetReport chain_dposet_check(const PrimorialLattice& p) {
  return dposet_check(
      p.chain(), [](const Level& a, const Level& b) { return a.subset_of(b); },
      [](const Level& y, const Level& x) { return difference(y, x); });
}

}  // namespace primlat
