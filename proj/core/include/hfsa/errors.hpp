// Copyright 2026 The hfsa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Exception types thrown by the hfsa library. Every error derives from
// hfsa::Error so callers can catch the whole family at once.

#ifndef HFSA_ERRORS_HPP_
#define HFSA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hfsa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values (empty index sets, n_symbols < 2, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A sequence of transitions that is not a consecutive path of the automaton.
class InvalidPath : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

// Vector/matrix dimensions disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Projection of a score vector whose entries are all -inf.
class DegenerateDistribution : public Error {
 public:
  using Error::Error;
};

// An operation was applied to an input outside its domain, e.g. compiling a
// non-deterministic automaton.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A threshold network produced a data sub-vector that is not a valid code.
class SimulationCorrupt : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line);
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  // 1-based line number, 0 when unknown.
  int line() const { return line_; }

 private:
  int line_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hfsa

#endif  // HFSA_ERRORS_HPP_
