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
// Reference automata and seeded generators used by tests, benchmarks and the
// `gen` command.

#ifndef HFSA_FIXTURES_HPP_
#define HFSA_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hfsa/wfsa.hpp"

namespace hfsa {

// Three-state DPFSA over {a, b} with support a b^n a b^m and b b^m:
//   p(a b^n a b^m) = 0.6 * 0.1^n * 0.9 * 0.7^m * 0.3
//   p(b b^m)       = 0.4 * 0.7^m * 0.3
Wfsa example_fslm();

// Non-determinizable PFSA over {a, b, c}:
//   p(a b^n c) = 0.5 * 0.9^n * 0.1 + 0.5 * 0.1^n * 0.9
Wfsa nondet_pfsa();

// Three-state DPFSA over {a, b} used to walk through the Minsky construction;
// p(b) = 0.9 * 0.5.
Wfsa minsky_example();

// Unweighted, incomplete three-state DFA over {a, b}: 0-a->1, 0-b->2, 1-a->2,
// 1-b->1, 2-b->0. No final states.
Wfsa dewdney_example();

struct NamedWfsa {
  std::string name;
  Wfsa fsa;
};

// example_fslm, nondet_pfsa, minsky_example (in that order).
std::vector<NamedWfsa> fixtures();

// The family A_N: symbols y1..yN, y1 leads 0 -> 1, y2..yN lead 0 -> 2. State 0
// spreads mass uniformly (1/N per symbol); states 1 and 2 are final with
// weight 1. Throws InvalidArgument for n_symbols < 2.
Wfsa gen_a_n(std::size_t n_symbols);

// Complete random DPFSA. Targets are uniform; each state's weights over the
// symbols plus EOS come from stick-breaking, so rows sum to one. State 0 is
// initial. Deterministic in `seed`.
Wfsa gen_random_dpfsa(std::uint64_t seed, std::size_t n_states,
                      std::size_t n_symbols);

// Complete random unweighted DFA; each state is final with probability
// `final_prob`. State 0 is initial.
Wfsa gen_random_dfa(std::uint64_t seed, std::size_t n_states,
                    std::size_t n_symbols, double final_prob = 0.5);

// Adds a rejecting sink so that every (state, symbol) has a transition.
// Returns `a` unchanged when it is already complete. Unweighted input only.
Wfsa complete_with_sink(const Wfsa& a);

// Symbol names a, b, c, ... (z, then s26, s27, ...).
std::vector<std::string> default_symbol_names(std::size_t n);

// Portable generator helpers (the standard distributions are not specified
// bit-for-bit across library implementations).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, 1).
  double uniform();
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

}  // namespace hfsa

#endif  // HFSA_FIXTURES_HPP_
