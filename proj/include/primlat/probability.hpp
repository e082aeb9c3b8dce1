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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "primlat/classify.hpp"
#include "primlat/negation.hpp"
#include "primlat/rational.hpp"

namespace primlat {

/// Axiom that failed, the witness elements and the two sides that differ.
struct ProbabilityViolation {
  std::string axiom;
  std::vector<Element> witness;
  Rational lhs{0};
  Rational rhs{0};
};

/// Additivity is only demanded for disjoint x, y such that every z
/// distributes over x v y.
inline bool additivity_gate(const FiniteLattice& l, Element x, Element y) {
  if (l.meet(x, y) != l.bottom()) return false;
  for (Element z = 0; z < l.size(); ++z)
    if (!distributive_triple(l, z, x, y)) return false;
  return true;
}

/// A validated assignment. `complement_identity` records whether
/// p(x) = 1 - p(neg x) holds for every x; it is reported, not required.
class ProbabilityAssignment {
 public:
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const std::vector<Element>& negation() const noexcept { return neg_; }
  const std::vector<Rational>& values() const noexcept { return p_; }
  Rational operator()(Element x) const { return p_[x]; }
  NegationClasses negation_classes() const noexcept { return classes_; }
  bool complement_identity() const noexcept { return complement_identity_; }

 private:
  friend std::variant<ProbabilityAssignment, ProbabilityViolation> validate_probability(
      const FiniteLattice&, const std::vector<Element>&, const std::vector<Rational>&);

  const FiniteLattice* lattice_ = nullptr;
  std::vector<Element> neg_;
  std::vector<Rational> p_;
  NegationClasses classes_;
  bool complement_identity_ = false;
};

/// Checks p(0) = 0, p(1) = 1, monotony and gated additivity. The lattice
/// must outlive the returned assignment.
inline std::variant<ProbabilityAssignment, ProbabilityViolation> validate_probability(
    const FiniteLattice& l, const std::vector<Element>& neg, const std::vector<Rational>& p) {
  auto classes = classify_negation(l, neg);
  if (!classes.contains(NegationClass::minimal))
    throw PreconditionError("probability needs at least a minimal negation");
  if (p.size() != l.size()) throw PreconditionError("probability must be total");
  const Element zero = l.bottom(), one = l.top();
  if (p[zero] != 0) return ProbabilityViolation{"p(0) = 0", {zero}, p[zero], Rational(0)};
  if (p[one] != 1) return ProbabilityViolation{"p(1) = 1", {one}, p[one], Rational(1)};
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (l.leq(x, y) && p[x] > p[y])
        return ProbabilityViolation{"monotone", {x, y}, p[x], p[y]};
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y)
      if (additivity_gate(l, x, y) && p[l.join(x, y)] != p[x] + p[y])
        return ProbabilityViolation{"gated additivity", {x, y}, p[l.join(x, y)], p[x] + p[y]};

  for (Element x = 0; x < l.size(); ++x)
    if (p[x] < 0 || p[x] > 1) throw std::logic_error("valid probability outside [0, 1]");
  ProbabilityAssignment a;
  a.lattice_ = &l;
  a.neg_ = neg;
  a.p_ = p;
  a.classes_ = classes;
  a.complement_identity_ = true;
  for (Element x = 0; x < l.size(); ++x)
    if (p[x] != 1 - p[neg[x]]) a.complement_identity_ = false;
  return a;
}

enum class ProbabilityDefinition { measure, traditional, generalized, quantum, gated };

inline const char* to_string(ProbabilityDefinition d) {
  switch (d) {
    case ProbabilityDefinition::measure: return "measure-theoretic";
    case ProbabilityDefinition::traditional: return "traditional";
    case ProbabilityDefinition::generalized: return "generalized";
    case ProbabilityDefinition::quantum: return "quantum";
    case ProbabilityDefinition::gated: return "distributivity-gated";
  }
  return "?";
}

struct DefinitionVerdict {
  ProbabilityDefinition definition;
  bool satisfied = true;
  std::optional<ProbabilityViolation> violation;
};

struct ProbabilityReport {
  std::vector<DefinitionVerdict> verdicts;
  bool complement_identity = false;

  const DefinitionVerdict& at(ProbabilityDefinition d) const {
    for (const auto& v : verdicts)
      if (v.definition == d) return v;
    throw std::logic_error("missing verdict");
  }
};

namespace detail {

inline std::optional<ProbabilityViolation> pair_additivity(
    const ProbabilityAssignment& a, const char* name,
    const std::function<bool(Element, Element)>& applies) {
  const auto& l = a.lattice();
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y)
      if (applies(x, y) && a(l.join(x, y)) != a(x) + a(y))
        return ProbabilityViolation{name, {x, y}, a(l.join(x, y)), a(x) + a(y)};
  return std::nullopt;
}

inline std::optional<ProbabilityViolation> normalized_nonnegative(const ProbabilityAssignment& a) {
  const auto& l = a.lattice();
  if (a(l.top()) != 1) return ProbabilityViolation{"p(1) = 1", {l.top()}, a(l.top()), Rational(1)};
  for (Element x = 0; x < l.size(); ++x)
    if (a(x) < 0) return ProbabilityViolation{"p(x) >= 0", {x}, a(x), Rational(0)};
  return std::nullopt;
}

// Finite stand-in for countable additivity: every family of pairwise
// disjoint nonzero elements has p(join) = sum of p.
inline std::optional<ProbabilityViolation> family_additivity(const ProbabilityAssignment& a) {
  const auto& l = a.lattice();
  std::vector<Element> fam;
  std::optional<ProbabilityViolation> bad;
  auto walk = [&](auto&& self, Element from, Element join, Rational sum) -> void {
    if (bad) return;
    if (fam.size() >= 2 && a(join) != sum) {
      bad = ProbabilityViolation{"additive over disjoint families", fam, a(join), sum};
      return;
    }
    for (Element e = from; e < l.size(); ++e) {
      if (e == l.bottom()) continue;
      bool disjoint = true;
      for (Element f : fam) disjoint = disjoint && l.meet(e, f) == l.bottom();
      if (!disjoint) continue;
      fam.push_back(e);
      self(self, e + 1, l.join(join, e), sum + a(e));
      fam.pop_back();
    }
  };
  walk(walk, 0, l.bottom(), Rational(0));
  return bad;
}

}  // namespace detail

/// Compares a valid assignment against the classical definitions. On
/// Boolean bases inclusion-exclusion and subadditivity are asserted.
inline ProbabilityReport probability_report(const ProbabilityAssignment& a) {
  const auto& l = a.lattice();
  const auto& neg = a.negation();
  ProbabilityReport rep;
  rep.complement_identity = a.complement_identity();
  auto verdict = [&](ProbabilityDefinition d, std::optional<ProbabilityViolation> v) {
    rep.verdicts.push_back({d, !v.has_value(), std::move(v)});
  };
  auto disjoint = [&](Element x, Element y) { return l.meet(x, y) == l.bottom(); };

  auto measure = detail::normalized_nonnegative(a);
  if (!measure) measure = detail::family_additivity(a);
  verdict(ProbabilityDefinition::measure, measure);

  auto traditional = detail::normalized_nonnegative(a);
  if (!traditional) traditional = detail::pair_additivity(a, "additive on disjoint pairs", disjoint);
  verdict(ProbabilityDefinition::traditional, traditional);

  std::optional<ProbabilityViolation> generalized;
  if (a(l.bottom()) != 0)
    generalized = ProbabilityViolation{"p(0) = 0", {l.bottom()}, a(l.bottom()), Rational(0)};
  else if (a(l.top()) != 1)
    generalized = ProbabilityViolation{"p(1) = 1", {l.top()}, a(l.top()), Rational(1)};
  for (Element x = 0; x < l.size() && !generalized; ++x)
    for (Element y = x + 1; y < l.size() && !generalized; ++y)
      if (a(l.join(x, y)) + a(l.meet(x, y)) != a(x) + a(y))
        generalized = ProbabilityViolation{"inclusion-exclusion", {x, y}, a(l.join(x, y)),
                                           a(x) + a(y) - a(l.meet(x, y))};
  verdict(ProbabilityDefinition::generalized, generalized);

  std::optional<ProbabilityViolation> quantum;
  if (a(l.bottom()) != 0)
    quantum = ProbabilityViolation{"p(0) = 0", {l.bottom()}, a(l.bottom()), Rational(0)};
  else if (a(l.top()) != 1)
    quantum = ProbabilityViolation{"p(1) = 1", {l.top()}, a(l.top()), Rational(1)};
  if (!quantum)
    quantum = detail::pair_additivity(a, "additive on orthogonal pairs", [&](Element x, Element y) {
      return l.leq(x, neg[y]);
    });
  verdict(ProbabilityDefinition::quantum, quantum);

  verdict(ProbabilityDefinition::gated, std::nullopt);

  if (classify(l).boolean) {
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        if (a(l.join(x, y)) != a(x) + a(y) - a(l.meet(x, y)))
          throw std::logic_error("inclusion-exclusion fails on a Boolean base");
        if (a(l.join(x, y)) > a(x) + a(y)) throw std::logic_error("subadditivity fails");
      }
  }
  return rep;
}

/// The complement of each element; every element must have exactly one.
inline std::vector<Element> unique_complements(const FiniteLattice& l) {
  std::vector<Element> neg(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    auto c = complements_of(l, x);
    if (c.size() != 1)
      throw PreconditionError("'" + l.label(x) + "' has " + std::to_string(c.size()) + " complements");
    neg[x] = c.front();
  }
  return neg;
}

/// p(x) = sum of the weights of the atoms below x over the total weight.
/// Weights follow the order of atoms(l) and must be positive.
inline std::vector<Rational> atom_weight_measure(const FiniteLattice& l,
                                                 const std::vector<Rational>& weights) {
  auto at = atoms(l);
  if (weights.size() != at.size())
    throw PreconditionError("need one weight per atom (" + std::to_string(at.size()) + ")");
  Rational total(0);
  for (const auto& w : weights) {
    if (w <= 0) throw PreconditionError("atom weights must be positive");
    total += w;
  }
  std::vector<Rational> p(l.size(), Rational(0));
  for (Element x = 0; x < l.size(); ++x)
    for (std::size_t i = 0; i < at.size(); ++i)
      if (l.leq(at[i], x)) p[x] += weights[i] / total;
  return p;
}

/// Outcome of random atom-weight assignments on one lattice.
struct WeightTrials {
  std::size_t trials = 0;
  std::size_t valid = 0;
  std::size_t inclusion_exclusion = 0;
  std::size_t subadditive = 0;
  std::optional<std::string> first_failure;
};

/// Draws integer atom weights in 1..1000 from a 64-bit Mersenne Twister
/// seeded with `seed` and checks each measure for validity,
/// inclusion-exclusion and p(x v y) <= p(x) + p(y).
inline WeightTrials random_weight_trials(const FiniteLattice& l, std::size_t trials, std::uint64_t seed) {
  const auto neg = unique_complements(l);
  const std::size_t atom_count = atoms(l).size();
  std::mt19937_64 rng(seed);
  WeightTrials out;
  auto note = [&](std::size_t t, const std::string& what) {
    if (!out.first_failure) out.first_failure = "trial " + std::to_string(t) + ": " + what;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> w;
    for (std::size_t i = 0; i < atom_count; ++i) w.emplace_back(static_cast<std::int64_t>(1 + rng() % 1000));
    auto p = atom_weight_measure(l, w);
    ++out.trials;
    auto v = validate_probability(l, neg, p);
    if (std::holds_alternative<ProbabilityAssignment>(v))
      ++out.valid;
    else
      note(t, std::get<ProbabilityViolation>(v).axiom);
    bool ie = true, sub = true;
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        ie = ie && p[l.join(x, y)] + p[l.meet(x, y)] == p[x] + p[y];
        sub = sub && p[l.join(x, y)] <= p[x] + p[y];
      }
    out.inclusion_exclusion += ie ? 1 : 0;
    out.subadditive += sub ? 1 : 0;
    if (!ie) note(t, "inclusion-exclusion");
    if (!sub) note(t, "subadditivity");
  }
  return out;
}

}  // namespace primlat
