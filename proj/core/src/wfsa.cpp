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

#include "hfsa/wfsa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "hfsa/errors.hpp"

namespace hfsa {

std::vector<SymbolId> Path::scan() const {
  std::vector<SymbolId> out;
  out.reserve(arcs.size());
  for (const auto& t : arcs) out.push_back(t.sym);
  return out;
}

Wfsa::Wfsa(Alphabet alphabet, std::size_t n_states,
           std::vector<Transition> transitions, std::vector<double> initial,
           std::vector<double> final_weights)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      final_(std::move(final_weights)) {
  if (initial_.size() != n_states || final_.size() != n_states) {
    throw InvalidArgument("initial/final weight vectors must have " +
                          std::to_string(n_states) + " entries");
  }
  for (std::size_t q = 0; q < n_states; ++q) {
    if (!std::isfinite(initial_[q]) || !std::isfinite(final_[q])) {
      throw InvalidArgument("non-finite initial/final weight at state " +
                            std::to_string(q));
    }
  }
  for (const auto& t : transitions_) {
    if (t.src >= n_states || t.dst >= n_states) {
      throw InvalidArgument("transition state out of range");
    }
    if (t.sym >= alphabet_.size()) {
      throw InvalidArgument("transition symbol out of range");
    }
    if (!std::isfinite(t.weight)) {
      throw InvalidArgument("non-finite transition weight");
    }
  }
  std::stable_sort(transitions_.begin(), transitions_.end(),
                   [](const Transition& x, const Transition& y) {
                     return std::tie(x.src, x.sym, x.dst) <
                            std::tie(y.src, y.sym, y.dst);
                   });
  offsets_.assign(n_states + 1, 0);
  for (const auto& t : transitions_) ++offsets_[t.src + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

std::span<const Transition> Wfsa::out(StateId q) const {
  if (q >= num_states()) throw InvalidArgument("state out of range");
  return {transitions_.data() + offsets_[q], offsets_[q + 1] - offsets_[q]};
}

std::span<const Transition> Wfsa::out(StateId q, SymbolId y) const {
  auto arcs = out(q);
  auto lo = std::lower_bound(
      arcs.begin(), arcs.end(), y,
      [](const Transition& t, SymbolId s) { return t.sym < s; });
  auto hi = std::upper_bound(
      lo, arcs.end(), y,
      [](SymbolId s, const Transition& t) { return s < t.sym; });
  return {lo, hi};
}

StateId Wfsa::initial_state() const {
  StateId found = kNoState;
  for (StateId q = 0; q < num_states(); ++q) {
    if (initial_[q] != 0.0) {
      if (found != kNoState) return kNoState;
      found = q;
    }
  }
  return found;
}

StateId Wfsa::next(StateId q, SymbolId y) const {
  auto arcs = out(q, y);
  return arcs.empty() ? kNoState : arcs.front().dst;
}

bool Wfsa::operator==(const Wfsa& other) const {
  return alphabet_ == other.alphabet_ && transitions_ == other.transitions_ &&
         initial_ == other.initial_ && final_ == other.final_;
}

double path_weight(const Wfsa& a, const Path& path) {
  if (path.origin >= a.num_states()) throw InvalidPath("origin out of range");
  double w = a.initial(path.origin);
  StateId at = path.origin;
  for (std::size_t k = 0; k < path.arcs.size(); ++k) {
    const auto& t = path.arcs[k];
    if (t.src != at) {
      throw InvalidPath("arc " + std::to_string(k) + " does not start where " +
                        "the previous one ended");
    }
    if (t.sym >= a.num_symbols() || t.dst >= a.num_states()) {
      throw InvalidPath("arc " + std::to_string(k) + " out of range");
    }
    auto arcs = a.out(t.src, t.sym);
    if (std::find(arcs.begin(), arcs.end(), t) == arcs.end()) {
      throw InvalidPath("arc " + std::to_string(k) +
                        " is not a transition of the automaton");
    }
    w *= t.weight;
    at = t.dst;
  }
  return w * a.final_weight(at);
}

double stringsum(const Wfsa& a, std::span<const SymbolId> y) {
  const std::size_t n = a.num_states();
  std::vector<double> alpha = a.initial_weights();
  std::vector<double> next(n);
  for (SymbolId s : y) {
    if (s >= a.num_symbols()) {
      throw UnknownSymbol("symbol id " + std::to_string(s) + " out of range");
    }
    std::fill(next.begin(), next.end(), 0.0);
    for (StateId q = 0; q < n; ++q) {
      if (alpha[q] == 0.0) continue;
      for (const auto& t : a.out(q, s)) next[t.dst] += alpha[q] * t.weight;
    }
    alpha.swap(next);
  }
  double total = 0.0;
  for (StateId q = 0; q < n; ++q) total += alpha[q] * a.final_weight(q);
  return total;
}

double stringsum(const Wfsa& a, std::string_view y) {
  return stringsum(a, a.alphabet().parse(y));
}

bool is_deterministic(const Wfsa& a) {
  if (a.initial_state() == kNoState) return false;
  const auto& ts = a.transitions();
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (ts[i].src == ts[i - 1].src && ts[i].sym == ts[i - 1].sym) return false;
  }
  return true;
}

bool is_probabilistic(const Wfsa& a, double tol) {
  double init_mass = 0.0;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.initial(q) < 0.0 || a.final_weight(q) < 0.0) return false;
    init_mass += a.initial(q);
  }
  if (std::abs(init_mass - 1.0) > tol) return false;
  for (StateId q = 0; q < a.num_states(); ++q) {
    double mass = a.final_weight(q);
    for (const auto& t : a.out(q)) {
      if (t.weight < 0.0) return false;
      mass += t.weight;
    }
    if (std::abs(mass - 1.0) > tol) return false;
  }
  return true;
}

bool is_log_separable(const Wfsa& a) {
  if (!is_deterministic(a)) return false;
  for (StateId q = 0; q < a.num_states(); ++q) {
    std::vector<StateId> targets;
    for (const auto& t : a.out(q)) targets.push_back(t.dst);
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
      return false;
    }
  }
  return true;
}

bool is_complete(const Wfsa& a) {
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId y = 0; y < a.num_symbols(); ++y) {
      if (a.out(q, y).empty()) return false;
    }
  }
  return true;
}

bool is_unweighted(const Wfsa& a) {
  for (const auto& t : a.transitions()) {
    if (t.weight != 1.0) return false;
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    double i = a.initial(q), f = a.final_weight(q);
    if ((i != 0.0 && i != 1.0) || (f != 0.0 && f != 1.0)) return false;
  }
  return true;
}

StateId run(const Wfsa& a, std::span<const SymbolId> y) {
  StateId q = a.initial_state();
  for (SymbolId s : y) {
    if (q == kNoState) return kNoState;
    if (s >= a.num_symbols()) {
      throw UnknownSymbol("symbol id " + std::to_string(s) + " out of range");
    }
    q = a.next(q, s);
  }
  return q;
}

bool accepts(const Wfsa& a, std::span<const SymbolId> y) {
  StateId q = run(a, y);
  return q != kNoState && a.final_weight(q) != 0.0;
}

}  // namespace hfsa
