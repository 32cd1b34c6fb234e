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

#include "hfsa/minsky.hpp"

#include <set>

#include "hfsa/errors.hpp"

namespace hfsa {

StateId minsky_decode(const HiddenState& h, std::size_t n_symbols) {
  StateId q = kNoState;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i]) continue;
    if (q != kNoState) return kNoState;
    q = static_cast<StateId>(i / n_symbols);
  }
  return q;
}

HrnnLm build_minsky(const Wfsa& a, Projection projection) {
  if (!is_deterministic(a)) {
    throw PreconditionError("Minsky construction needs a deterministic automaton");
  }
  if (!is_probabilistic(a, kDefaultProbTol)) {
    throw PreconditionError("Minsky construction needs a probabilistic automaton");
  }
  const std::size_t S = a.num_symbols();
  const std::size_t Q = a.num_states();
  const std::size_t D = Q * S;
  if (S == 0) throw PreconditionError("Minsky construction needs a non-empty alphabet");

  Matrix<double> U(D, D, 0.0), V(D, S, 0.0);
  for (const auto& t : a.transitions()) {
    const std::size_t row = minsky_index(t.dst, t.sym, S);
    for (SymbolId y = 0; y < S; ++y) U(row, minsky_index(t.src, y, S)) = 1.0;
    V(row, t.sym) = 1.0;
  }

  auto cell = [&](double w) {
    return projection == Projection::kSoftmax ? ExtReal::log_of(w) : ExtReal(w);
  };
  Matrix<ExtReal> E(S + 1, D);
  for (StateId q = 0; q < Q; ++q) {
    std::vector<double> w(S + 1, 0.0);
    for (const auto& t : a.out(q)) w[t.sym] += t.weight;
    w[S] = a.final_weight(q);
    for (SymbolId y = 0; y < S; ++y) {
      for (std::size_t k = 0; k <= S; ++k) E(k, minsky_index(q, y, S)) = cell(w[k]);
    }
  }

  HiddenState h0(D, 0);
  h0[minsky_index(a.initial_state(), 0, S)] = 1;
  return HrnnLm(a.alphabet(), std::move(U), std::move(V),
                std::vector<double>(D, -1.0), std::move(h0), std::move(E),
                projection);
}

std::pair<std::vector<double>, double> and_neuron(
    std::span<const std::size_t> indices, std::size_t width) {
  std::set<std::size_t> set(indices.begin(), indices.end());
  if (set.empty()) throw InvalidArgument("AND of an empty set");
  if (*set.rbegin() >= width) throw InvalidArgument("AND index out of range");
  std::vector<double> w(width, 0.0);
  for (auto i : set) w[i] = 1.0;
  return {std::move(w), -static_cast<double>(set.size() - 1)};
}

}  // namespace hfsa
