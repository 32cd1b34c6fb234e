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

#include "hfsa/separate.hpp"

#include <map>

#include "hfsa/errors.hpp"

namespace hfsa {

SeparateResult separate(const Wfsa& a) {
  if (!is_deterministic(a)) throw PreconditionError("separation needs a deterministic automaton");
  SeparateResult out;
  std::map<std::pair<StateId, SymbolId>, StateId> ids;
  out.origin.emplace_back(a.initial_state(), kNoSymbol);
  auto intern = [&](StateId q, SymbolId y) {
    auto [it, fresh] = ids.emplace(std::pair{q, y}, static_cast<StateId>(out.origin.size()));
    if (fresh) out.origin.emplace_back(q, y);
    return it->second;
  };

  std::vector<Transition> arcs;
  for (std::size_t i = 0; i < out.origin.size(); ++i) {
    const StateId q = out.origin[i].first;
    for (const auto& t : a.out(q)) {
      arcs.push_back({static_cast<StateId>(i), t.sym, 1.0, intern(t.dst, t.sym)});
    }
  }
  const std::size_t n = out.origin.size();
  std::vector<double> lambda(n, 0.0), rho(n, 0.0);
  lambda[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) rho[i] = a.final_weight(out.origin[i].first) != 0.0;
  out.fsa = Wfsa(a.alphabet(), n, std::move(arcs), std::move(lambda), std::move(rho));
  return out;
}

}  // namespace hfsa
