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

#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "primlat/poset.hpp"

namespace primlat {

/// A finite poset where every pair has a least upper and greatest lower bound.
/// Join and meet are tabulated once on construction.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Returns nullopt when some pair lacks a join or a meet.
  static std::optional<FiniteLattice> from_poset(FinitePoset p) {
    FiniteLattice l;
    const std::size_t n = p.size();
    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    std::vector<std::size_t> down(n), up(n);
    for (Element x = 0; x < n; ++x) {
      down[x] = p.down_count(x);
      up[x] = p.up_count(x);
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = x; y < n; ++y) {
        auto j = bound(p, x, y, down, /*upper=*/true);
        auto m = bound(p, x, y, up, /*upper=*/false);
        if (!j || !m) return std::nullopt;
        l.join_[x * n + y] = l.join_[y * n + x] = *j;
        l.meet_[x * n + y] = l.meet_[y * n + x] = *m;
      }
    l.poset_ = std::move(p);
    if (n > 0) {
      l.bottom_ = l.top_ = 0;
      for (Element x = 1; x < n; ++x) {
        l.bottom_ = l.meet(l.bottom_, x);
        l.top_ = l.join(l.top_, x);
      }
    }
    return l;
  }

  /// Like from_poset but throws PreconditionError naming a pair with no bound.
  static FiniteLattice require(FinitePoset p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> down(n), up(n);
    for (Element x = 0; x < n; ++x) {
      down[x] = p.down_count(x);
      up[x] = p.up_count(x);
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y) {
        if (!bound(p, x, y, down, true))
          throw PreconditionError("not a lattice: no join for " + p.label(x) + ", " + p.label(y));
        if (!bound(p, x, y, up, false))
          throw PreconditionError("not a lattice: no meet for " + p.label(x) + ", " + p.label(y));
      }
    return *from_poset(std::move(p));
  }

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  bool empty() const noexcept { return poset_.empty(); }
  const std::string& label(Element x) const { return poset_.label(x); }
  const std::vector<std::string>& labels() const noexcept { return poset_.labels(); }
  Element index_of(const std::string& s) const { return poset_.index_of(s); }
  std::optional<Element> find(const std::string& s) const { return poset_.find(s); }

  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  bool lt(Element x, Element y) const { return poset_.lt(x, y); }

  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Join of a set; the empty join is the bottom.
  Element join_all(std::span<const Element> xs) const {
    Element acc = bottom_;
    for (Element x : xs) acc = join(acc, x);
    return acc;
  }

  /// Meet of a set; the empty meet is the top.
  Element meet_all(std::span<const Element> xs) const {
    Element acc = top_;
    for (Element x : xs) acc = meet(acc, x);
    return acc;
  }

  std::vector<Element> elements() const {
    std::vector<Element> v(size());
    for (Element i = 0; i < size(); ++i) v[i] = i;
    return v;
  }

 private:
  // Least upper bound (or greatest lower bound) by picking the candidate
  // with the fewest elements below (above) it, then checking it is below
  // (above) every other candidate.
  static std::optional<Element> bound(const FinitePoset& p, Element x, Element y,
                                      const std::vector<std::size_t>& rank, bool upper) {
    const std::size_t n = p.size();
    auto is_bound = [&](Element u) {
      return upper ? (p.leq(x, u) && p.leq(y, u)) : (p.leq(u, x) && p.leq(u, y));
    };
    std::optional<Element> best;
    for (Element u = 0; u < n; ++u)
      if (is_bound(u) && (!best || rank[u] < rank[*best])) best = u;
    if (!best) return std::nullopt;
    for (Element u = 0; u < n; ++u)
      if (is_bound(u) && !(upper ? p.leq(*best, u) : p.leq(u, *best))) return std::nullopt;
    return best;
  }

  FinitePoset poset_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Either a lattice or, when some bound is missing, the bare poset.
using PosetOrLattice = std::variant<FinitePoset, FiniteLattice>;

/// Builds the poset from labels and cover pairs and upgrades it when it is a lattice.
inline PosetOrLattice build_lattice(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& covers) {
  auto p = FinitePoset::from_labelled_covers(std::move(labels), covers);
  if (auto l = FiniteLattice::from_poset(p)) return std::move(*l);
  return p;
}

/// Longest chain from the bottom to each element, in cover steps.
inline std::vector<std::size_t> heights(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<Element> ord(n);
  for (Element i = 0; i < n; ++i) ord[i] = i;
  std::vector<std::size_t> down(n);
  for (Element i = 0; i < n; ++i) down[i] = l.poset().down_count(i);
  std::stable_sort(ord.begin(), ord.end(), [&](Element a, Element b) { return down[a] < down[b]; });
  std::vector<std::size_t> h(n, 0);
  for (Element y : ord)
    for (Element x = 0; x < n; ++x)
      if (l.poset().covers(x, y)) h[y] = std::max(h[y], h[x] + 1);
  return h;
}

/// Elements covering the bottom.
inline std::vector<Element> atoms(const FiniteLattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x)
    if (l.poset().covers(l.bottom(), x)) out.push_back(x);
  return out;
}

/// All y with x join y = 1 and x meet y = 0.
inline std::vector<Element> complements_of(const FiniteLattice& l, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < l.size(); ++y)
    if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) out.push_back(y);
  return out;
}

/// The two-element chain {0, 1}.
inline FiniteLattice two_chain() {
  return FiniteLattice::require(
      FinitePoset::from_labelled_covers({"0", "1"}, {{"0", "1"}}));
}

/// A chain with the given labels, ascending.
inline FiniteLattice chain(std::vector<std::string> labels) {
  std::vector<std::pair<std::string, std::string>> cov;
  for (std::size_t i = 1; i < labels.size(); ++i) cov.emplace_back(labels[i - 1], labels[i]);
  return FiniteLattice::require(FinitePoset::from_labelled_covers(std::move(labels), cov));
}

}  // namespace primlat
