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

#include "hfsa/fixtures.hpp"

#include "hfsa/errors.hpp"

namespace hfsa {
namespace {

Wfsa make(std::vector<std::string> symbols, std::size_t n_states,
          StateId start, std::vector<Transition> arcs,
          std::vector<std::pair<StateId, double>> finals) {
  std::vector<double> init(n_states, 0.0), fin(n_states, 0.0);
  init[start] = 1.0;
  for (auto [q, w] : finals) fin[q] = w;
  return Wfsa(Alphabet(symbols), n_states, std::move(arcs), std::move(init),
              std::move(fin));
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("below(0)");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::vector<std::string> default_symbol_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                           : "s" + std::to_string(i));
  }
  return names;
}

Wfsa example_fslm() {
  // a = 0, b = 1
  return make({"a", "b"}, 3, 0,
              {{0, 0, 0.6, 1}, {0, 1, 0.4, 2}, {1, 1, 0.1, 1},
               {1, 0, 0.9, 2}, {2, 1, 0.7, 2}},
              {{2, 0.3}});
}

Wfsa nondet_pfsa() {
  return make({"a", "b", "c"}, 4, 0,
              {{0, 0, 0.5, 1}, {0, 0, 0.5, 2}, {1, 1, 0.9, 1},
               {2, 1, 0.1, 2}, {1, 2, 0.1, 3}, {2, 2, 0.9, 3}},
              {{3, 1.0}});
}

Wfsa minsky_example() {
  return make({"a", "b"}, 3, 0,
              {{0, 0, 0.1, 1}, {0, 1, 0.9, 2}, {1, 0, 0.5, 0},
               {1, 1, 0.5, 2}, {2, 1, 0.5, 2}},
              {{2, 0.5}});
}

Wfsa dewdney_example() {
  return make({"a", "b"}, 3, 0,
              {{0, 0, 1.0, 1}, {0, 1, 1.0, 2}, {1, 0, 1.0, 2},
               {1, 1, 1.0, 1}, {2, 1, 1.0, 0}},
              {});
}

std::vector<NamedWfsa> fixtures() {
  return {{"example_fslm", example_fslm()},
          {"nondet_pfsa", nondet_pfsa()},
          {"minsky_example", minsky_example()}};
}

Wfsa gen_a_n(std::size_t n_symbols) {
  if (n_symbols < 2) throw InvalidArgument("A_N needs at least 2 symbols");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n_symbols; ++i) {
    names.push_back("y" + std::to_string(i));
  }
  const double w = 1.0 / static_cast<double>(n_symbols);
  std::vector<Transition> arcs;
  arcs.push_back({0, 0, w, 1});
  for (SymbolId y = 1; y < n_symbols; ++y) arcs.push_back({0, y, w, 2});
  return make(names, 3, 0, std::move(arcs), {{1, 1.0}, {2, 1.0}});
}

Wfsa gen_random_dpfsa(std::uint64_t seed, std::size_t n_states,
                      std::size_t n_symbols) {
  if (n_states < 1 || n_symbols < 1) {
    throw InvalidArgument("need at least one state and one symbol");
  }
  SplitMix64 rng(seed);
  std::vector<Transition> arcs;
  std::vector<double> fin(n_states);
  for (StateId q = 0; q < n_states; ++q) {
    double remaining = 1.0;
    for (SymbolId y = 0; y < n_symbols; ++y) {
      // Break off a piece in (0, remaining); the open interval keeps every
      // weight positive.
      double u = (static_cast<double>(rng.next() >> 11) + 0.5) * 0x1.0p-53;
      double piece = remaining * u;
      remaining -= piece;
      auto dst = static_cast<StateId>(rng.below(n_states));
      arcs.push_back({q, y, piece, dst});
    }
    fin[q] = remaining;
  }
  std::vector<double> init(n_states, 0.0);
  init[0] = 1.0;
  return Wfsa(Alphabet(default_symbol_names(n_symbols)), n_states,
              std::move(arcs), std::move(init), std::move(fin));
}

Wfsa gen_random_dfa(std::uint64_t seed, std::size_t n_states,
                    std::size_t n_symbols, double final_prob) {
  if (n_states < 1 || n_symbols < 1) {
    throw InvalidArgument("need at least one state and one symbol");
  }
  SplitMix64 rng(seed);
  std::vector<Transition> arcs;
  std::vector<double> fin(n_states, 0.0);
  for (StateId q = 0; q < n_states; ++q) {
    for (SymbolId y = 0; y < n_symbols; ++y) {
      arcs.push_back({q, y, 1.0, static_cast<StateId>(rng.below(n_states))});
    }
    fin[q] = rng.uniform() < final_prob ? 1.0 : 0.0;
  }
  std::vector<double> init(n_states, 0.0);
  init[0] = 1.0;
  return Wfsa(Alphabet(default_symbol_names(n_symbols)), n_states,
              std::move(arcs), std::move(init), std::move(fin));
}

Wfsa complete_with_sink(const Wfsa& a) {
  if (!is_unweighted(a)) {
    throw PreconditionError("complete_with_sink needs an unweighted automaton");
  }
  if (is_complete(a)) return a;
  const auto sink = static_cast<StateId>(a.num_states());
  std::vector<Transition> arcs = a.transitions();
  for (StateId q = 0; q <= sink; ++q) {
    for (SymbolId y = 0; y < a.num_symbols(); ++y) {
      if (q == sink || a.out(q, y).empty()) arcs.push_back({q, y, 1.0, sink});
    }
  }
  auto init = a.initial_weights();
  auto fin = a.final_weights();
  init.push_back(0.0);
  fin.push_back(0.0);
  return Wfsa(a.alphabet(), sink + 1, std::move(arcs), std::move(init),
              std::move(fin));
}

}  // namespace hfsa
