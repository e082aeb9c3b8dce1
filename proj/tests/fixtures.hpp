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

#include <random>
#include <string>
#include <vector>

#include "primlat.hpp"

namespace primlat::testing {

inline std::string data_path(const std::string& file) { return std::string(PRIMLAT_TEST_DATA) + "/" + file; }

inline FiniteLattice lattice_from(std::vector<std::string> labels,
                                  std::vector<std::pair<std::string, std::string>> covers) {
  return FiniteLattice::require(FinitePoset::from_labelled_covers(std::move(labels), covers));
}

inline FiniteLattice pentagon() {
  return lattice_from({"0", "a", "b", "p", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "p"}, {"p", "1"}});
}

inline FiniteLattice diamond() {
  return lattice_from({"0", "p", "q", "r", "1"},
                      {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
}

/// Subsets of {1..n} under inclusion, labelled by subset literals.
inline FiniteLattice powerset(unsigned n) { return Level::boolean(n).lattice(); }

/// Set complement on the powerset.
inline OrthoLattice boolean_ortho(unsigned n) { return inherited_ortho(Level::boolean(n)); }

inline Element at(const FiniteLattice& l, const std::string& s) { return l.index_of(s); }
inline Element at(const OrthoLattice& o, const std::string& s) { return o.lattice().index_of(s); }

/// Random poset on n elements: i < j with probability `density` for i < j
/// in a hidden linear order, then transitively closed.
inline FinitePoset random_poset(std::mt19937& rng, std::size_t n, double density = 0.35) {
  std::bernoulli_distribution coin(density);
  Relation r(n);
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (coin(rng)) r.set(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return FinitePoset::from_order(std::move(labels), reflexive_transitive_closure(r));
}

/// Every orthocomplemented lattice (one entry per orthocomplementation)
/// among the lattices with at most `max_size` elements.
inline std::vector<OrthoLattice> all_ortho_lattices(std::size_t max_size) {
  std::vector<OrthoLattice> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& l : enumerate_lattices(n))
      for (auto& perp : find_orthocomplements(l)) out.emplace_back(l, std::move(perp));
  return out;
}

}  // namespace primlat::testing
