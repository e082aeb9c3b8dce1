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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "primlat/error.hpp"

namespace primlat {

/// Elements are indices into a poset's label list.
using Element = std::size_t;

/// Dense square boolean matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(Element x, Element y) const { return bits_[x * n_ + y] != 0; }
  void set(Element x, Element y, bool value = true) { bits_[x * n_ + y] = value ? 1 : 0; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Warshall closure, reflexive as well.
inline Relation reflexive_transitive_closure(Relation r) {
  const std::size_t n = r.size();
  for (Element x = 0; x < n; ++x) r.set(x, x);
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (r(i, k))
        for (Element j = 0; j < n; ++j)
          if (r(k, j)) r.set(i, j);
  return r;
}

/// Covering pairs of a partial order: x < y with nothing strictly between.
inline Relation transitive_reduction(const Relation& order) {
  const std::size_t n = order.size();
  Relation cov(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !order(x, y)) continue;
      bool direct = true;
      for (Element z = 0; z < n && direct; ++z)
        if (z != x && z != y && order(x, z) && order(z, y)) direct = false;
      if (direct) cov.set(x, y);
    }
  return cov;
}

/// A finite partially ordered set over labelled elements.
///
/// The order matrix is dense; element i carries labels()[i] and ties
/// between otherwise equal choices always go to the lower index.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Validates reflexivity, antisymmetry and transitivity.
  static FinitePoset from_order(std::vector<std::string> labels, Relation order) {
    if (order.size() != labels.size())
      throw PreconditionError("order matrix size does not match label count");
    FinitePoset p;
    p.set_labels(std::move(labels));
    const std::size_t n = order.size();
    for (Element x = 0; x < n; ++x)
      if (!order(x, x))
        throw OrderError("reflexivity violation", {p.labels_[x]});
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (order(x, y) && order(y, x))
          throw OrderError("antisymmetry violation", {p.labels_[x], p.labels_[y]});
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (order(x, y))
          for (Element z = 0; z < n; ++z)
            if (order(y, z) && !order(x, z))
              throw OrderError("transitivity violation",
                               {p.labels_[x], p.labels_[y], p.labels_[z]});
    p.order_ = std::move(order);
    p.covers_ = transitive_reduction(p.order_);
    return p;
  }

  /// Builds the order generated by the given strict pairs (lower, upper).
  /// A cycle among the pairs is reported as an antisymmetry violation.
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 std::span<const std::pair<Element, Element>> covers) {
    const std::size_t n = labels.size();
    Relation r(n);
    for (auto [lo, hi] : covers) {
      if (lo >= n || hi >= n) throw PreconditionError("cover pair references unknown element");
      if (lo == hi) throw OrderError("antisymmetry violation: element covers itself", {labels[lo]});
      r.set(lo, hi);
    }
    r = reflexive_transitive_closure(std::move(r));
    return from_order(std::move(labels), std::move(r));
  }

  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<Element, Element>>& covers) {
    return from_covers(std::move(labels), std::span<const std::pair<Element, Element>>(covers));
  }

  /// Same as from_covers but with pairs given by label.
  static FinitePoset from_labelled_covers(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers) {
    FinitePoset tmp;
    tmp.set_labels(labels);
    std::vector<std::pair<Element, Element>> idx;
    idx.reserve(covers.size());
    for (const auto& [lo, hi] : covers) idx.emplace_back(tmp.index_of(lo), tmp.index_of(hi));
    return from_covers(std::move(labels), idx);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }

  std::optional<Element> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element index_of(const std::string& label) const {
    auto e = find(label);
    if (!e) throw PreconditionError("unknown element '" + label + "'");
    return *e;
  }

  bool leq(Element x, Element y) const { return order_(x, y); }
  bool lt(Element x, Element y) const { return x != y && order_(x, y); }
  bool comparable(Element x, Element y) const { return order_(x, y) || order_(y, x); }
  bool covers(Element lower, Element upper) const { return covers_(lower, upper); }

  const Relation& order() const noexcept { return order_; }
  const Relation& cover_relation() const noexcept { return covers_; }

  /// Cover pairs (lower, upper) in row-major order.
  std::vector<std::pair<Element, Element>> cover_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < size(); ++x)
      for (Element y = 0; y < size(); ++y)
        if (covers_(x, y)) out.emplace_back(x, y);
    return out;
  }

  /// Subposet on the given elements with the inherited order, in the given sequence.
  FinitePoset induced(std::span<const Element> subset) const {
    std::vector<std::string> labels;
    labels.reserve(subset.size());
    for (Element e : subset) labels.push_back(label(e));
    Relation r(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = 0; j < subset.size(); ++j)
        if (leq(subset[i], subset[j])) r.set(i, j);
    return from_order(std::move(labels), std::move(r));
  }

  /// Same carrier, reversed order.
  FinitePoset dual() const {
    Relation r(size());
    for (Element x = 0; x < size(); ++x)
      for (Element y = 0; y < size(); ++y)
        if (leq(y, x)) r.set(x, y);
    FinitePoset p;
    p.set_labels(labels_);
    p.order_ = std::move(r);
    p.covers_ = transitive_reduction(p.order_);
    return p;
  }

  /// Number of elements at or below x.
  std::size_t down_count(Element x) const {
    std::size_t c = 0;
    for (Element y = 0; y < size(); ++y) c += leq(y, x) ? 1 : 0;
    return c;
  }

  std::size_t up_count(Element x) const {
    std::size_t c = 0;
    for (Element y = 0; y < size(); ++y) c += leq(x, y) ? 1 : 0;
    return c;
  }

 private:
  void set_labels(std::vector<std::string> labels) {
    index_.clear();
    for (Element i = 0; i < labels.size(); ++i) {
      if (!index_.emplace(labels[i], i).second)
        throw PreconditionError("duplicate element label '" + labels[i] + "'");
    }
    labels_ = std::move(labels);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  Relation order_;
  Relation covers_;
};

/// Longest chain, counted in cover steps (a single element has length 0).
inline std::size_t length(const FinitePoset& p) {
  if (p.empty()) return 0;
  // Elements sorted by down-count form a linear extension.
  std::vector<Element> ord(p.size());
  for (Element i = 0; i < p.size(); ++i) ord[i] = i;
  std::stable_sort(ord.begin(), ord.end(),
                   [&](Element a, Element b) { return p.down_count(a) < p.down_count(b); });
  std::vector<std::size_t> best(p.size(), 0);
  std::size_t out = 0;
  for (Element y : ord) {
    for (Element x : ord) {
      if (x == y) break;
      if (p.lt(x, y)) best[y] = std::max(best[y], best[x] + 1);
    }
    out = std::max(out, best[y]);
  }
  return out;
}

/// Minimum chain partition via maximum bipartite matching on the strict order.
/// Its size equals the width of the poset.
inline std::vector<std::vector<Element>> min_chain_partition(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::optional<Element>> match_right(n);  // right y -> left x with x < y
  std::vector<std::optional<Element>> match_left(n);
  std::vector<char> seen;
  auto augment = [&](auto&& self, Element x) -> bool {
    for (Element y = 0; y < n; ++y) {
      if (!p.lt(x, y) || seen[y]) continue;
      seen[y] = 1;
      if (!match_right[y] || self(self, *match_right[y])) {
        match_right[y] = x;
        match_left[x] = y;
        return true;
      }
    }
    return false;
  };
  for (Element x = 0; x < n; ++x) {
    seen.assign(n, 0);
    augment(augment, x);
  }
  std::vector<std::vector<Element>> chains;
  for (Element x = 0; x < n; ++x) {
    if (match_right[x]) continue;  // not a chain head
    std::vector<Element> chain{x};
    for (auto cur = match_left[x]; cur; cur = match_left[*cur]) chain.push_back(*cur);
    chains.push_back(std::move(chain));
  }
  return chains;
}

inline std::size_t width(const FinitePoset& p) { return min_chain_partition(p).size(); }

}  // namespace primlat
