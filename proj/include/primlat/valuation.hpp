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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primlat/lattice.hpp"
#include "primlat/rational.hpp"

namespace primlat {

struct ValuationCheck {
  bool valuation = true;
  bool isotone = true;
  std::optional<std::pair<Element, Element>> valuation_witness;
  std::optional<std::pair<Element, Element>> isotone_witness;
};

/// Tests v(x v y) + v(x ^ y) = v(x) + v(y) and x <= y => v(x) <= v(y).
inline ValuationCheck check_valuation(const FiniteLattice& l, const std::vector<Rational>& v) {
  if (v.size() != l.size()) throw PreconditionError("valuation must be total");
  ValuationCheck c;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x; y < l.size(); ++y) {
      if (c.valuation && v[l.join(x, y)] + v[l.meet(x, y)] != v[x] + v[y]) {
        c.valuation = false;
        c.valuation_witness = std::pair{x, y};
      }
      if (c.isotone && ((l.leq(x, y) && v[x] > v[y]) || (l.leq(y, x) && v[y] > v[x]))) {
        c.isotone = false;
        c.isotone_witness = l.leq(x, y) ? std::pair{x, y} : std::pair{y, x};
      }
    }
  return c;
}

inline std::vector<Rational> height_valuation(const FiniteLattice& l) {
  auto h = heights(l);
  std::vector<Rational> v;
  v.reserve(h.size());
  for (auto x : h) v.emplace_back(static_cast<std::int64_t>(x));
  return v;
}

/// d(x, y) = v(x v y) - v(x ^ y) for an isotone valuation v.
class LatticeMetric {
 public:
  /// Throws PreconditionError with a witness when v is not an isotone
  /// valuation, or when it is not strictly isotone (then d is only a
  /// pseudometric and two distinct elements sit at distance zero).
  LatticeMetric(const FiniteLattice& l, std::vector<Rational> v) : n_(l.size()) {
    auto c = check_valuation(l, v);
    if (!c.valuation)
      throw PreconditionError("not a valuation at " + l.label(c.valuation_witness->first) + ", " +
                              l.label(c.valuation_witness->second));
    if (!c.isotone)
      throw PreconditionError("valuation is not isotone at " + l.label(c.isotone_witness->first) +
                              " <= " + l.label(c.isotone_witness->second));
    d_.resize(n_ * n_);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) d_[x * n_ + y] = v[l.join(x, y)] - v[l.meet(x, y)];
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (x != y && d(x, y) == 0)
          throw PreconditionError("valuation is not strictly isotone: d(" + l.label(x) + ", " +
                                  l.label(y) + ") = 0");
    check_axioms();
  }

  std::size_t size() const noexcept { return n_; }
  Rational d(Element x, Element y) const { return d_[x * n_ + y]; }

  /// {y : d(x, y) <= r}
  std::vector<Element> closed_ball(Element x, const Rational& r) const {
    if (r < 0) throw PreconditionError("ball radius must be non-negative");
    std::vector<Element> out;
    for (Element y = 0; y < n_; ++y)
      if (d(x, y) <= r) out.push_back(y);
    return out;
  }

  /// {y : d(x, y) < r}
  std::vector<Element> open_ball(Element x, const Rational& r) const {
    if (r < 0) throw PreconditionError("ball radius must be non-negative");
    std::vector<Element> out;
    for (Element y = 0; y < n_; ++y)
      if (d(x, y) < r) out.push_back(y);
    return out;
  }

 private:
  void check_axioms() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        if (d(x, y) < 0) throw std::logic_error("metric is negative");
        if ((d(x, y) == 0) != (x == y)) throw std::logic_error("metric is degenerate");
        if (d(x, y) != d(y, x)) throw std::logic_error("metric is not symmetric");
        for (Element z = 0; z < n_; ++z)
          if (d(x, z) > d(x, y) + d(y, z)) throw std::logic_error("triangle inequality fails");
      }
  }

  std::size_t n_;
  std::vector<Rational> d_;
};

inline LatticeMetric metric_from_valuation(const FiniteLattice& l, std::vector<Rational> v) {
  return LatticeMetric(l, std::move(v));
}

inline LatticeMetric height_metric(const FiniteLattice& l) {
  return LatticeMetric(l, height_valuation(l));
}

}  // namespace primlat
