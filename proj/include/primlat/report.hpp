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

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "primlat/classify.hpp"
#include "primlat/negation.hpp"
#include "primlat/ortho.hpp"
#include "primlat/primorial.hpp"
#include "primlat/probability.hpp"
#include "primlat/valuation.hpp"

// Plain-text reports, one "key: value" per line, in a fixed order so that
// equal inputs give byte-identical output.

namespace primlat {

inline std::string joined_labels(const FinitePoset& p, std::span<const Element> xs,
                                 const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + p.label(xs[i]);
  return s.empty() ? "-" : s;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

/// Round-trips through parse_lattice_text.
inline void write_lattice_text(std::ostream& out, const FinitePoset& p, const std::string& name) {
  if (!name.empty()) out << "lattice " << name << '\n';
  out << "elements";
  for (Element x = 0; x < p.size(); ++x) out << ' ' << p.label(x);
  out << "\ncovers";
  for (auto [lo, hi] : p.cover_pairs()) out << ' ' << p.label(lo) << '<' << p.label(hi);
  out << '\n';
}

inline void write_property_report(std::ostream& out, const FiniteLattice& l, const PropertyReport& r) {
  const auto& p = l.poset();
  auto list = [&](std::span<const Element> xs) { return joined_labels(p, xs); };
  out << "elements: " << l.size() << '\n';
  out << "lattice: true\n";
  out << "bounded: " << yes_no(r.bounded) << '\n';
  out << "modular: " << yes_no(r.modular) << '\n';
  out << "distributive: " << yes_no(r.distributive) << '\n';
  out << "complemented: " << yes_no(r.complemented) << '\n';
  out << "complementation: " << to_string(r.complementation) << '\n';
  out << "boolean: " << yes_no(r.boolean) << '\n';
  out << "atomic: " << yes_no(r.atomic) << '\n';
  out << "width: " << r.width << '\n';
  out << "length: " << r.length << '\n';
  out << "chain-partition:";
  for (std::size_t i = 0; i < r.chain_partition.size(); ++i)
    out << (i ? " | " : " ") << joined_labels(p, r.chain_partition[i], "<");
  out << "\nheights:";
  for (Element x = 0; x < l.size(); ++x) out << ' ' << l.label(x) << '=' << r.heights[x];
  out << '\n';
  if (r.non_modular_pair) {
    Element pair[] = {r.non_modular_pair->first, r.non_modular_pair->second};
    out << "non-modular-pair: " << list(pair) << '\n';
  }
  if (r.pentagon) out << "pentagon: " << list(*r.pentagon) << '\n';
  if (r.non_distributive_triple) out << "non-distributive-triple: " << list(*r.non_distributive_triple) << '\n';
  if (r.diamond) out << "diamond: " << list(*r.diamond) << '\n';
  if (r.uncomplemented) out << "uncomplemented: " << l.label(*r.uncomplemented) << '\n';
}

/// For a poset that is not a lattice: width, length and the missing bound.
inline void write_poset_report(std::ostream& out, const FinitePoset& p, const std::string& reason) {
  out << "elements: " << p.size() << '\n';
  out << "lattice: false\n";
  out << "reason: " << reason << '\n';
  out << "width: " << width(p) << '\n';
  out << "length: " << length(p) << '\n';
}

inline void write_ortho_report(std::ostream& out, const OrthoLattice& o) {
  const auto& p = o.lattice().poset();
  auto c = ortho_class(o);
  out << "orthocomplemented: true\n";
  out << "orthomodular: " << yes_no(c.orthomodular) << '\n';
  out << "modular-orthocomplemented: " << yes_no(c.modular_orthocomplemented) << '\n';
  out << "boolean: " << yes_no(c.boolean) << '\n';
  if (auto f = orthomodular_failure(o))
    out << "orthomodular-failure: " << p.label(f->first) << ' ' << p.label(f->second) << '\n';
  out << "complements:";
  for (Element x = 0; x < o.size(); ++x) out << ' ' << p.label(x) << ':' << p.label(o.perp(x));
  auto pairs = orthogonal_pairs(o);
  out << "\northogonal-pairs: " << pairs.size() << '\n';
  for (auto [x, y] : pairs) out << "orthogonal: " << p.label(x) << ' ' << p.label(y) << '\n';
  out << "center: " << joined_labels(p, center(o)) << '\n';
  out << "elkan-law: " << yes_no(elkan_law(o)) << '\n';
}

inline void write_negation_report(std::ostream& out, const FiniteLattice& l,
                                  const std::vector<Element>& neg) {
  auto classes = classify_negation(l, neg);
  out << "negation:";
  for (Element x = 0; x < l.size(); ++x) out << ' ' << l.label(x) << "->" << l.label(neg[x]);
  out << "\nclasses:";
  if (classes.empty()) out << " none";
  for (auto c : classes.list()) out << ' ' << to_string(c);
  out << '\n';
  for (auto c : kAllNegationClasses) out << to_string(c) << ": " << yes_no(classes.contains(c)) << '\n';
}

/// Distance matrix as TSV with a header row of labels.
inline void write_metric_tsv(std::ostream& out, const FiniteLattice& l, const LatticeMetric& m) {
  out << "d";
  for (Element y = 0; y < l.size(); ++y) out << '\t' << l.label(y);
  out << '\n';
  for (Element x = 0; x < l.size(); ++x) {
    out << l.label(x);
    for (Element y = 0; y < l.size(); ++y) out << '\t' << to_string(m.d(x, y));
    out << '\n';
  }
}

inline void write_violation(std::ostream& out, const FiniteLattice& l, const ProbabilityViolation& v) {
  out << v.axiom << " at " << joined_labels(l.poset(), v.witness) << ": " << to_string(v.lhs)
      << " != " << to_string(v.rhs);
}

inline void write_probability_report(std::ostream& out, const ProbabilityAssignment& a,
                                     const ProbabilityReport& r) {
  const auto& l = a.lattice();
  out << "valid: true\n";
  out << "negation-classes:";
  for (auto c : a.negation_classes().list()) out << ' ' << to_string(c);
  out << "\ncomplement-identity: " << yes_no(r.complement_identity) << '\n';
  for (const auto& v : r.verdicts) {
    out << to_string(v.definition) << ": " << (v.satisfied ? "satisfied" : "violated");
    if (v.violation) {
      out << " (";
      write_violation(out, l, *v.violation);
      out << ')';
    }
    out << '\n';
  }
}

/// Serialized members followed by the cover relation of the family.
inline void write_primorial(std::ostream& out, const PrimorialLattice& p) {
  out << p.serialize();
  const auto& f = p.family();
  out << "family:";
  for (auto [lo, hi] : f.poset().cover_pairs()) out << ' ' << f.label(lo) << '<' << f.label(hi);
  out << '\n';
}

inline void write_dposet_report(std::ostream& out, const PrimorialLattice& p, const DPosetReport& r) {
  out << "members:";
  for (std::size_t i = 0; i < p.chain().size(); ++i) out << " L2^" << i + 1;
  out << '\n';
  if (r.passed) {
    out << "dposet: pass\n";
    return;
  }
  out << "dposet: fail\nlaw: " << r.failed_law << "\nwitness:";
  for (auto i : r.witness) out << " L2^" << i + 1;
  out << '\n';
}

}  // namespace primlat
