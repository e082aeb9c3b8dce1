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

#include "primlat/primorial.hpp"
#include "primlat/valuation.hpp"

namespace primlat {

enum class ProjectionMethod { zero, sasaki, metric, ceiling };

inline const char* to_string(ProjectionMethod m) {
  switch (m) {
    case ProjectionMethod::zero: return "zero";
    case ProjectionMethod::sasaki: return "sasaki";
    case ProjectionMethod::metric: return "metric";
    case ProjectionMethod::ceiling: return "ceiling";
  }
  return "?";
}

inline ProjectionMethod parse_projection_method(const std::string& s) {
  if (s == "zero") return ProjectionMethod::zero;
  if (s == "sasaki") return ProjectionMethod::sasaki;
  if (s == "metric") return ProjectionMethod::metric;
  if (s == "ceiling") return ProjectionMethod::ceiling;
  throw PreconditionError("unknown projection method '" + s + "'");
}

/// Projections of top-carrier elements onto one member level of a family.
/// Operations that need a Boolean host use the least chain level holding
/// both x and the target carrier, with that level's induced operations and
/// height metric.
class Projector {
 public:
  Projector(const PrimorialLattice& p, LevelRef target)
      : p_(&p), ref_(target), y_(&p.level(target)) {
    for (unsigned m = 1; m <= p.top_n(); ++m) {
      if (y_->subset_of(p.boolean_level(m))) {
        first_host_ = m;
        break;
      }
    }
    if (first_host_ == 0) throw std::logic_error("target level lies in no chain level");
    for (unsigned m = first_host_; m <= p.top_n(); ++m)
      metrics_.push_back(height_metric(p.boolean_level(m).lattice()));
  }

  const Level& target() const noexcept { return *y_; }
  LevelRef target_ref() const noexcept { return ref_; }

  /// x when x is in the target, else 0.
  Mask zero(Mask x) const {
    check(x);
    return y_->contains(x) ? x : Mask{0};
  }

  /// Join over the target of the Sasaki images that land in it; both
  /// the definitional and the meet-based form are computed and compared.
  Mask sasaki(Mask x) const {
    Mask a = sasaki_definitional(x);
    Mask b = sasaki_maxmini(x);
    if (a != b) throw std::logic_error("Sasaki projection forms disagree at " + subset_literal(x));
    return a;
  }

  /// Join of {(x v y') ^ y : y in Y} intersected with Y.
  Mask sasaki_definitional(Mask x) const {
    check(x);
    const Level& B = host(x);
    const Mask top = *B.top();
    std::vector<Element> hits;
    for (Mask y : y_->carrier()) {
      Mask v = B.meet(B.join(x, top & ~y), y);
      if (auto i = y_->index_of(v)) hits.push_back(*i);
    }
    return y_->mask(y_->lattice().join_all(hits));
  }

  /// Join of {x ^ y : y in Y} intersected with Y.
  Mask sasaki_maxmini(Mask x) const {
    check(x);
    const Level& B = host(x);
    std::vector<Element> hits;
    for (Mask y : y_->carrier())
      if (auto i = y_->index_of(B.meet(x, y))) hits.push_back(*i);
    return y_->mask(y_->lattice().join_all(hits));
  }

  /// Meet over the target of the smallest closed height ball around x that
  /// meets the target.
  Mask metric(Mask x) const {
    check(x);
    const unsigned m = host_rank(x);
    const Level& B = p_->boolean_level(m);
    const LatticeMetric& d = metrics_[m - first_host_];
    const Element xi = B.require_index(x);
    std::optional<Rational> best;
    for (Mask y : y_->carrier()) {
      Rational r = d.d(xi, B.require_index(y));
      if (!best || r < *best) best = r;
    }
    std::vector<Element> hits;
    for (Element e : d.closed_ball(xi, *best))
      if (auto i = y_->index_of(B.mask(e))) hits.push_back(*i);
    return y_->mask(y_->lattice().meet_all(hits));
  }

  /// Least target element above x (the target contains the top).
  Mask ceiling(Mask x) const {
    check(x);
    std::vector<Element> above;
    for (Element e = 0; e < y_->size(); ++e)
      if ((x & ~y_->mask(e)) == 0) above.push_back(e);
    return y_->mask(y_->lattice().meet_all(above));
  }

  Mask apply(ProjectionMethod method, Mask x) const {
    switch (method) {
      case ProjectionMethod::zero: return zero(x);
      case ProjectionMethod::sasaki: return sasaki(x);
      case ProjectionMethod::metric: return metric(x);
      case ProjectionMethod::ceiling: return ceiling(x);
    }
    throw PreconditionError("unknown projection method");
  }

  /// Least chain rank whose carrier holds x and the target.
  unsigned host_rank(Mask x) const {
    for (unsigned m = first_host_; m <= p_->top_n(); ++m)
      if (p_->boolean_level(m).contains(x)) return m;
    throw std::logic_error("element lies in no chain level");
  }

 private:
  void check(Mask x) const {
    if (!p_->top().contains(x))
      throw PreconditionError(subset_literal(x) + " is not in the top carrier");
  }
  const Level& host(Mask x) const { return p_->boolean_level(host_rank(x)); }

  const PrimorialLattice* p_;
  LevelRef ref_;
  const Level* y_;
  unsigned first_host_ = 0;
  std::vector<LatticeMetric> metrics_;
};

inline Mask proj_zero(const PrimorialLattice& p, LevelRef level, Mask x) {
  return Projector(p, level).zero(x);
}
inline Mask proj_sasaki(const PrimorialLattice& p, LevelRef level, Mask x) {
  return Projector(p, level).sasaki(x);
}
inline Mask proj_metric(const PrimorialLattice& p, LevelRef level, Mask x) {
  return Projector(p, level).metric(x);
}
inline Mask proj_ceiling(const PrimorialLattice& p, LevelRef level, Mask x) {
  return Projector(p, level).ceiling(x);
}

/// Pointwise projection; length is preserved.
inline std::vector<Mask> project_sequence(const PrimorialLattice& p, LevelRef level,
                                          const std::vector<Mask>& seq, ProjectionMethod method) {
  Projector proj(p, level);
  std::vector<Mask> out;
  out.reserve(seq.size());
  for (Mask x : seq) out.push_back(proj.apply(method, x));
  return out;
}

}  // namespace primlat
