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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace primlat {

/// Base of every error the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An order relation that is not reflexive, antisymmetric or transitive.
class OrderError : public Error {
 public:
  OrderError(const std::string& what, std::vector<std::string> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

/// A precondition of an operation does not hold for its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A supplied map or assignment breaks one of the axioms it must satisfy.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::string> witness)
      : Error(describe(axiom, witness)),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::string& axiom,
                              const std::vector<std::string>& witness) {
    std::string s = "axiom violated: " + axiom;
    if (!witness.empty()) {
      s += " at";
      for (const auto& w : witness) s += " " + w;
    }
    return s;
  }

  std::string axiom_;
  std::vector<std::string> witness_;
};

/// Malformed text input; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(where(line, column) + what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string where(std::size_t line, std::size_t column) {
    if (line == 0) return "";
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ": ";
  }

  std::size_t line_;
  std::size_t column_;
};

/// A size cap was hit, e.g. an exponential poset that would be too large.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace primlat
