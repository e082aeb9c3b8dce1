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

#include <string>
#include <unordered_set>
#include <vector>

#include "primlat/poset.hpp"

namespace primlat {

enum class ComposeOp { direct_sum, direct_product, ordinal_sum, ordinal_product, exponential, dual };

struct ComposeLimits {
  std::size_t max_elements = 1u << 14;
};

namespace detail {

// Carriers of the two operands are treated as disjoint tagged copies. When a
// label repeats, the right operand's copy is primed until it is unique.
inline std::vector<std::string> tagged_union_labels(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::string> labels = p.labels();
  std::unordered_set<std::string> seen(labels.begin(), labels.end());
  for (const auto& s : q.labels()) {
    std::string t = s;
    while (seen.count(t)) t += "'";
    seen.insert(t);
    labels.push_back(t);
  }
  return labels;
}

inline void check_size(std::size_t n, const ComposeLimits& lim) {
  if (n > lim.max_elements)
    throw LimitExceeded("composition would have " + std::to_string(n) + " elements, cap is " +
                        std::to_string(lim.max_elements));
}

template <typename Leq>
FinitePoset product_like(const FinitePoset& p, const FinitePoset& q, const ComposeLimits& lim,
                         Leq leq) {
  const std::size_t n = p.size() * q.size();
  check_size(n, lim);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < q.size(); ++y) labels.push_back("(" + p.label(x) + "," + q.label(y) + ")");
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a / q.size(), a % q.size(), b / q.size(), b % q.size())) r.set(a, b);
  return FinitePoset::from_order(std::move(labels), std::move(r));
}

template <typename Cross>
FinitePoset sum_like(const FinitePoset& p, const FinitePoset& q, Cross cross) {
  const std::size_t n = p.size() + q.size();
  Relation r(n);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) r.set(x, y);
  const std::size_t off = p.size();
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (q.leq(x, y)) r.set(off + x, off + y);
  if (cross)
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < q.size(); ++y) r.set(x, off + y);
  return FinitePoset::from_order(tagged_union_labels(p, q), std::move(r));
}

}  // namespace detail

/// Disjoint union; elements of different operands are incomparable.
inline FinitePoset direct_sum(const FinitePoset& p, const FinitePoset& q) {
  return detail::sum_like(p, q, false);
}

/// Disjoint union with every element of p below every element of q.
inline FinitePoset ordinal_sum(const FinitePoset& p, const FinitePoset& q) {
  return detail::sum_like(p, q, true);
}

/// Coordinatewise order on pairs.
inline FinitePoset direct_product(const FinitePoset& p, const FinitePoset& q,
                                  const ComposeLimits& lim = {}) {
  return detail::product_like(p, q, lim, [&](Element x1, Element y1, Element x2, Element y2) {
    return p.leq(x1, x2) && q.leq(y1, y2);
  });
}

/// Lexicographic order on pairs, first coordinate dominant.
inline FinitePoset ordinal_product(const FinitePoset& p, const FinitePoset& q,
                                   const ComposeLimits& lim = {}) {
  return detail::product_like(p, q, lim, [&](Element x1, Element y1, Element x2, Element y2) {
    return (x1 != x2 && p.leq(x1, x2)) || (x1 == x2 && q.leq(y1, y2));
  });
}

/// Order-preserving maps exponent -> base under the pointwise order.
/// Labels list images in exponent order, e.g. "[0,1]".
inline FinitePoset power(const FinitePoset& base, const FinitePoset& exponent,
                         const ComposeLimits& lim = {}) {
  const std::size_t m = exponent.size();
  std::vector<std::vector<Element>> maps;
  std::vector<Element> f(m);
  auto extend = [&](auto&& self, Element x) -> void {
    if (x == m) {
      maps.push_back(f);
      detail::check_size(maps.size(), lim);
      return;
    }
    for (Element v = 0; v < base.size(); ++v) {
      bool ok = true;
      for (Element w = 0; w < x && ok; ++w) {
        if (exponent.leq(w, x) && !base.leq(f[w], v)) ok = false;
        if (exponent.leq(x, w) && !base.leq(v, f[w])) ok = false;
      }
      if (!ok) continue;
      f[x] = v;
      self(self, x + 1);
    }
  };
  extend(extend, 0);
  const std::size_t n = maps.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& g : maps) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + base.label(g[i]);
    labels.push_back(s + "]");
  }
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (Element x = 0; x < m && le; ++x) le = base.leq(maps[a][x], maps[b][x]);
      if (le) r.set(a, b);
    }
  return FinitePoset::from_order(std::move(labels), std::move(r));
}

/// Dispatches on op. Exponential yields the maps p -> q; dual uses p only.
inline FinitePoset compose(const FinitePoset& p, const FinitePoset& q, ComposeOp op,
                           const ComposeLimits& lim = {}) {
  switch (op) {
    case ComposeOp::direct_sum: return direct_sum(p, q);
    case ComposeOp::direct_product: return direct_product(p, q, lim);
    case ComposeOp::ordinal_sum: return ordinal_sum(p, q);
    case ComposeOp::ordinal_product: return ordinal_product(p, q, lim);
    case ComposeOp::exponential: return power(q, p, lim);
    case ComposeOp::dual: return p.dual();
  }
  throw PreconditionError("unknown composition");
}

}  // namespace primlat
