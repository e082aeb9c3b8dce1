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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primlat/poset.hpp"

namespace primlat {

namespace detail {

using Invariant = std::pair<std::size_t, std::size_t>;

inline std::vector<Invariant> invariants(const FinitePoset& p) {
  std::vector<Invariant> inv(p.size());
  for (Element x = 0; x < p.size(); ++x) inv[x] = {p.down_count(x), p.up_count(x)};
  return inv;
}

}  // namespace detail

/// An order isomorphism p -> q as map[x] = image of x, or nullopt.
inline std::optional<std::vector<Element>> find_isomorphism(const FinitePoset& p,
                                                            const FinitePoset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  auto ip = detail::invariants(p);
  auto iq = detail::invariants(q);
  {
    auto a = ip, b = iq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<Element> map(n);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y] || iq[y] != ip[x]) continue;
      bool ok = true;
      for (Element w = 0; w < x && ok; ++w)
        ok = p.leq(w, x) == q.leq(map[w], y) && p.leq(x, w) == q.leq(y, map[w]);
      if (!ok) continue;
      used[y] = 1;
      map[x] = y;
      if (self(self, x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

inline bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return find_isomorphism(p, q).has_value();
}

/// Canonical code plus the element sequence that produces it.
struct CanonicalForm {
  std::string code;
  std::vector<Element> sequence;  // sequence[i] = element placed at position i
};

/// Lexicographically least order code over all relabellings that keep
/// elements sorted by (down-count, up-count). Two posets are isomorphic
/// exactly when their codes are equal. Meant for small posets.
inline CanonicalForm canonical_form(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 16) throw LimitExceeded("canonical form is limited to 16 elements");
  auto inv = detail::invariants(p);
  std::vector<Element> sorted(n);
  for (Element i = 0; i < n; ++i) sorted[i] = i;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](Element a, Element b) { return inv[a] < inv[b]; });

  std::string header = std::to_string(n) + ":";
  for (Element e : sorted)
    header += std::to_string(inv[e].first) + "," + std::to_string(inv[e].second) + ";";

  // Position i contributes order bits against every earlier position in both
  // directions, so the code can be compared prefix by prefix.
  std::string best;
  std::vector<Element> best_seq;
  std::string cur;
  std::vector<Element> seq;
  std::vector<char> used(n, 0);
  auto place = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (best_seq.empty() || cur < best) {
        best = cur;
        best_seq = seq;
      }
      return;
    }
    for (Element e = 0; e < n; ++e) {
      if (used[e] || inv[e] != inv[sorted[pos]]) continue;
      const std::size_t mark = cur.size();
      for (std::size_t j = 0; j < pos; ++j) {
        cur.push_back(p.leq(e, seq[j]) ? '1' : '0');
        cur.push_back(p.leq(seq[j], e) ? '1' : '0');
      }
      bool prune = false;
      if (!best_seq.empty()) {
        int c = cur.compare(0, cur.size(), best, 0, cur.size());
        prune = c > 0;
      }
      if (!prune) {
        used[e] = 1;
        seq.push_back(e);
        self(self, pos + 1);
        seq.pop_back();
        used[e] = 0;
      }
      cur.resize(mark);
    }
  };
  place(place, 0);
  return {header + best, best_seq};
}

}  // namespace primlat
