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

// Weighted Minsky construction: a DPFSA over Q and an alphabet becomes an
// HRNN language model with one hidden unit per (state, incoming symbol) pair.

#ifndef HFSA_MINSKY_HPP_
#define HFSA_MINSKY_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hfsa/hrnn.hpp"
#include "hfsa/wfsa.hpp"

namespace hfsa {

// n(q, y) = q |alphabet| + y.
inline std::size_t minsky_index(StateId q, SymbolId y, std::size_t n_symbols) {
  return static_cast<std::size_t>(q) * n_symbols + y;
}

// The state encoded by a one-hot hidden vector, or kNoState when h is not
// one-hot.
StateId minsky_decode(const HiddenState& h, std::size_t n_symbols);

// Requires a deterministic, probabilistic (tol 1e-9) automaton; throws
// PreconditionError otherwise. Missing transitions are allowed: they drive
// the network into the all-zero dead state.
HrnnLm build_minsky(const Wfsa& a, Projection projection);

// Weights over a width-D input and the bias of a neuron computing the AND of
// the bits in `indices`. Throws InvalidArgument for an empty or out-of-range
// index set.
std::pair<std::vector<double>, double> and_neuron(
    std::span<const std::size_t> indices, std::size_t width);

}  // namespace hfsa

#endif  // HFSA_MINSKY_HPP_
