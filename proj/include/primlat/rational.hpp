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
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "primlat/error.hpp"

namespace boost {

// C++20 rewritten comparisons make Boost's mixed `int == rational<long>`
// template call itself. Exact non-template overloads take precedence.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(int b, const rational<std::int64_t>& a) {
  return a == rational<std::int64_t>(b);
}

}  // namespace boost

namespace primlat {

/// Exact rational used for valuations, metrics and probabilities.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q", "p" or "-p/q". Throws ParseError with column 0.
inline Rational parse_rational(std::string_view text, std::size_t line = 0) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw ParseError("empty number in '" + std::string(text) + "'", line);
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw ParseError("bad number '" + std::string(text) + "'", line);
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw ParseError("bad number '" + std::string(text) + "'", line);
      if (v > (INT64_MAX - (s[i] - '0')) / 10)
        throw ParseError("number out of range '" + std::string(text) + "'", line);
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", line);
  return Rational(num, den);
}

}  // namespace primlat
