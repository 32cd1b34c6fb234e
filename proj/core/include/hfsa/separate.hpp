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

// Separation: an equivalent DFA in which every ordered pair of states is
// joined by at most one transition. States remember the symbol that entered
// them, so all edges into a state share one label.

#ifndef HFSA_SEPARATE_HPP_
#define HFSA_SEPARATE_HPP_

#include <utility>
#include <vector>

#include "hfsa/wfsa.hpp"

namespace hfsa {

inline constexpr SymbolId kNoSymbol = static_cast<SymbolId>(-1);

struct SeparateResult {
  Wfsa fsa;
  // (original state, entering symbol) per output state; state 0 is the fresh
  // initial state, labelled (original initial, kNoSymbol).
  std::vector<std::pair<StateId, SymbolId>> origin;
};

// Only (state, symbol) pairs reachable from the fresh initial state are
// built. Weights are ignored: the output is unweighted and a state is final
// iff its original has non-zero final weight. Throws PreconditionError for
// non-deterministic input.
SeparateResult separate(const Wfsa& a);

}  // namespace hfsa

#endif  // HFSA_SEPARATE_HPP_
