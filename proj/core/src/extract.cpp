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

#include "hfsa/extract.hpp"

#include <map>

#include "hfsa/errors.hpp"

namespace hfsa {

Wfsa extract_dpfsa(const HrnnLm& lm, std::size_t max_states,
                   std::vector<HiddenState>* hidden) {
  if (max_states < 1) throw InvalidArgument("max_states must be positive");
  const std::size_t S = lm.alphabet().size();
  std::map<HiddenState, StateId> ids;
  std::vector<HiddenState> states;
  auto intern = [&](const HiddenState& h) {
    auto [it, fresh] = ids.emplace(h, static_cast<StateId>(states.size()));
    if (fresh) {
      if (states.size() >= max_states) {
        throw BudgetExceeded("more than " + std::to_string(max_states) +
                             " reachable hidden states");
      }
      states.push_back(h);
    }
    return it->second;
  };

  intern(lm.h0());
  std::vector<Transition> arcs;
  std::vector<double> rho;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const HiddenState h = states[i];
    const SimplexVec p = next_dist(lm, h);
    rho.push_back(p[S]);
    for (SymbolId y = 0; y < S; ++y) {
      if (p[y] == 0.0) continue;
      HiddenState next = step(lm, h, y);
      if (is_dead_state(lm, next)) continue;
      arcs.push_back({static_cast<StateId>(i), y, p[y], intern(next)});
    }
  }

  std::vector<double> lambda(states.size(), 0.0);
  lambda[0] = 1.0;
  if (hidden) *hidden = states;
  return Wfsa(lm.alphabet(), states.size(), std::move(arcs), std::move(lambda),
              std::move(rho));
}

}  // namespace hfsa
