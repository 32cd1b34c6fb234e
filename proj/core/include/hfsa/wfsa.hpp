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
// Weighted finite-state automata over the real (probability) semiring.
//
// A Wfsa is the usual 5-tuple: an alphabet, states 0..n-1, a transition set,
// and initial/final weight functions. Values are immutable once built, so
// every query below is safe to call from concurrent readers.

#ifndef HFSA_WFSA_HPP_
#define HFSA_WFSA_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hfsa/alphabet.hpp"

namespace hfsa {

inline constexpr double kDefaultProbTol = 1e-9;

struct Transition {
  StateId src = 0;
  SymbolId sym = 0;
  double weight = 1.0;
  StateId dst = 0;

  bool operator==(const Transition&) const = default;
};

// A path starts at `origin` and follows `arcs`; an empty path is a single
// state.
struct Path {
  StateId origin = 0;
  std::vector<Transition> arcs;

  StateId end() const { return arcs.empty() ? origin : arcs.back().dst; }
  std::vector<SymbolId> scan() const;
};

class Wfsa {
 public:
  Wfsa() = default;

  // Throws InvalidArgument on out-of-range states/symbols, mismatched weight
  // vector sizes, or non-finite weights.
  Wfsa(Alphabet alphabet, std::size_t n_states,
       std::vector<Transition> transitions, std::vector<double> initial,
       std::vector<double> final_weights);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return initial_.size(); }
  std::size_t num_symbols() const { return alphabet_.size(); }

  // Sorted by (src, sym, dst).
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::span<const Transition> out(StateId q) const;
  // Transitions leaving q labelled y.
  std::span<const Transition> out(StateId q, SymbolId y) const;

  double initial(StateId q) const { return initial_.at(q); }
  double final_weight(StateId q) const { return final_.at(q); }
  const std::vector<double>& initial_weights() const { return initial_; }
  const std::vector<double>& final_weights() const { return final_; }

  // The unique state with non-zero initial weight, or kNoState.
  StateId initial_state() const;

  // Target of the first y-transition out of q, or kNoState.
  StateId next(StateId q, SymbolId y) const;

  bool operator==(const Wfsa& other) const;

 private:
  Alphabet alphabet_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;  // CSR offsets into transitions_ by src
  std::vector<double> initial_;
  std::vector<double> final_;
};

// lambda(origin) * prod(weights) * rho(end). Throws InvalidPath if the arcs are
// not consecutive or are not transitions of `a`.
double path_weight(const Wfsa& a, const Path& path);

// Total weight of all paths scanning `y` (forward algorithm). Throws
// UnknownSymbol for ids outside the alphabet.
double stringsum(const Wfsa& a, std::span<const SymbolId> y);
double stringsum(const Wfsa& a, std::string_view y);

bool is_deterministic(const Wfsa& a);
bool is_probabilistic(const Wfsa& a, double tol = kDefaultProbTol);
// Deterministic, and every ordered state pair has at most one transition.
bool is_log_separable(const Wfsa& a);
// Every (state, symbol) pair has an outgoing transition.
bool is_complete(const Wfsa& a);
// All transition weights are 1 and initial/final weights are 0 or 1.
bool is_unweighted(const Wfsa& a);

// For unweighted automata: the state after reading y from the initial state,
// or kNoState when a transition is missing. Requires determinism.
StateId run(const Wfsa& a, std::span<const SymbolId> y);
bool accepts(const Wfsa& a, std::span<const SymbolId> y);

}  // namespace hfsa

#endif  // HFSA_WFSA_HPP_
