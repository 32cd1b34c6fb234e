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

// Weight-generic reader for the automaton text format. Internal; shared by
// the float and exact-rational readers.

#ifndef HFSA_SRC_WFSA_READER_HPP_
#define HFSA_SRC_WFSA_READER_HPP_

#include <algorithm>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "hfsa/alphabet.hpp"
#include "hfsa/errors.hpp"
#include "text_util.hpp"

namespace hfsa::detail {

template <typename W>
struct WfsaParts {
  struct Arc {
    StateId src;
    SymbolId sym;
    W weight;
    StateId dst;
  };
  Alphabet alphabet;
  std::size_t n_states = 0;
  std::vector<Arc> arcs;
  std::vector<W> initial, final_weights;
};

inline StateId parse_state(std::string_view tok, int line) {
  auto v = parse_count(tok, line);
  if (v >= kNoState) throw ParseError("state id too large", line);
  return static_cast<StateId>(v);
}

// `parse_weight(token, line)` converts a weight token; `one` and `zero` are
// the defaults for omitted and absent weights.
template <typename W, typename ParseW>
WfsaParts<W> read_wfsa_parts(std::istream& in, ParseW&& parse_weight,
                             const W& zero, const W& one) {
  WfsaParts<W> out;
  Alphabet& alphabet = out.alphabet;
  std::vector<std::optional<W>> initial, final_w;
  std::size_t& n_states = out.n_states;
  auto touch = [&](StateId q) {
    n_states = std::max<std::size_t>(n_states, std::size_t{q} + 1);
    if (initial.size() < n_states) {
      initial.resize(n_states);
      final_w.resize(n_states);
    }
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "@alphabet") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (alphabet.find(toks[i])) {
          throw ParseError("duplicate symbol '" + std::string(toks[i]) + "'",
                           lineno);
        }
        alphabet.intern(toks[i]);
      }
    } else if (toks[0] == "@states") {
      if (toks.size() != 2) throw ParseError("@states takes one count", lineno);
      auto n = parse_count(toks[1], lineno);
      if (n > 0) touch(static_cast<StateId>(n - 1));
    } else if (toks[0] == "@init") {
      if (toks.size() < 2 || toks.size() > 3) {
        throw ParseError("@init takes a state and an optional weight", lineno);
      }
      StateId q = parse_state(toks[1], lineno);
      touch(q);
      if (initial[q]) throw ParseError("duplicate initial weight", lineno);
      initial[q] = toks.size() == 3 ? parse_weight(toks[2], lineno) : one;
    } else if (toks[0].front() == '@') {
      throw ParseError("unknown directive '" + std::string(toks[0]) + "'",
                       lineno);
    } else if (toks.size() <= 2) {
      StateId q = parse_state(toks[0], lineno);
      touch(q);
      if (final_w[q]) throw ParseError("duplicate final weight", lineno);
      final_w[q] = toks.size() == 2 ? parse_weight(toks[1], lineno) : one;
    } else if (toks.size() <= 4) {
      typename WfsaParts<W>::Arc t{parse_state(toks[0], lineno),
                                   alphabet.intern(toks[2]),
                                   toks.size() == 4 ? parse_weight(toks[3], lineno) : one,
                                   parse_state(toks[1], lineno)};
      touch(t.src);
      touch(t.dst);
      out.arcs.push_back(std::move(t));
    } else {
      throw ParseError("too many fields", lineno);
    }
  }

  out.initial.assign(n_states, zero);
  out.final_weights.assign(n_states, zero);
  for (std::size_t q = 0; q < n_states; ++q) {
    if (initial[q]) out.initial[q] = *initial[q];
    if (final_w[q]) out.final_weights[q] = *final_w[q];
  }
  return out;
}

}  // namespace hfsa::detail

#endif  // HFSA_SRC_WFSA_READER_HPP_
