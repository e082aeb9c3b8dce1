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

#include <array>
#include <concepts>
#include <string>
#include <vector>

namespace primlat {

struct DPosetReport {
  bool passed = true;
  std::string failed_law;            // empty when passed
  std::vector<std::size_t> witness;  // member indices x, y[, z]
};

/// Checks the difference axioms and their four derived laws over every
/// chain x <= y <= z of members. Differences may leave the member set, so
/// the value type only needs equality, `leq` and `diff(y, x)` for x <= y.
template <typename T, typename Leq, typename Diff>
  requires std::equality_comparable<T> && std::predicate<Leq, const T&, const T&> &&
           std::invocable<Diff, const T&, const T&>
DPosetReport dposet_check(const std::vector<T>& members, Leq leq, Diff diff) {
  DPosetReport r;
  auto fail = [&](const char* law, std::vector<std::size_t> w) {
    r.passed = false;
    r.failed_law = law;
    r.witness = std::move(w);
    return r;
  };
  const std::size_t n = members.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const T& x = members[i];
      const T& y = members[j];
      if (!leq(x, y)) continue;
      const T yx = diff(y, x);
      if (!leq(yx, y)) return fail("difference below minuend: y\\x <= y", {i, j});
      if (!(diff(y, yx) == x)) return fail("double difference: y\\(y\\x) = x", {i, j});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq(members[i], members[j])) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const T& x = members[i];
        const T& y = members[j];
        const T& z = members[k];
        if (!leq(y, z)) continue;
        const T zy = diff(z, y), zx = diff(z, x), yx = diff(y, x);
        if (!leq(zy, zx)) return fail("antitone in subtrahend: z\\y <= z\\x", {i, j, k});
        if (!(diff(zx, zy) == yx)) return fail("(z\\x)\\(z\\y) = y\\x", {i, j, k});
        if (!leq(yx, zx)) return fail("derived: y\\x <= z\\x", {i, j, k});
        const T z_yx = diff(z, yx);
        if (!leq(x, z_yx)) return fail("derived: x <= z\\(y\\x)", {i, j, k});
        if (!(diff(zx, yx) == zy)) return fail("derived: (z\\x)\\(y\\x) = z\\y", {i, j, k});
        if (!(diff(z_yx, x) == zy)) return fail("derived: [z\\(y\\x)]\\x = z\\y", {i, j, k});
      }
    }
  return r;
}

}  // namespace primlat
