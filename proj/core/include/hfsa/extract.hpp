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

// DPFSA extraction from an HRNN language model: every hidden vector reachable
// from h0 becomes a state, and the next-symbol distribution supplies the
// transition and final weights.

#ifndef HFSA_EXTRACT_HPP_
#define HFSA_EXTRACT_HPP_

#include <cstddef>
#include <vector>

#include "hfsa/hrnn.hpp"
#include "hfsa/wfsa.hpp"

namespace hfsa {

inline constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 20;

// Breadth-first over symbols in id order; h0 becomes state 0. Zero-weight
// transitions and transitions into dead states are dropped. Throws
// BudgetExceeded once more than max_states states are reachable. When
// `hidden` is given it receives the hidden vector of every state.
Wfsa extract_dpfsa(const HrnnLm& lm, std::size_t max_states = kDefaultMaxStates,
                   std::vector<HiddenState>* hidden = nullptr);

}  // namespace hfsa

#endif  // HFSA_EXTRACT_HPP_
