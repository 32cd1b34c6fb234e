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

#include "hfsa/compress.hpp"

#include <numeric>

#include "hfsa/errors.hpp"
#include "hfsa/fixtures.hpp"

namespace hfsa {

namespace {

void require_dfa(const Wfsa& a, bool complete) {
  if (!is_deterministic(a)) throw PreconditionError("compression needs a deterministic automaton");
  if (a.num_symbols() == 0) throw PreconditionError("compression needs a non-empty alphabet");
  if (complete && !is_complete(a)) {
    throw PreconditionError("compression needs a complete automaton (add a sink state)");
  }
}

ThresholdNet net_shell(const Wfsa& a, NetMethod method, StateCode code) {
  ThresholdNet net;
  net.method = method;
  net.alphabet = a.alphabet();
  net.code = std::move(code);
  net.initial = a.initial_state();
  net.finals.resize(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) net.finals[q] = a.final_weight(q) != 0.0;
  net.initial_data = net.code.encode(net.initial, 0);
  return net;
}

// Adds the weighted inputs of a pair neuron: row unit i is `row_src(i)`,
// column unit j is `col_src(j)` (each possibly several net inputs).
template <typename RowSrc, typename ColSrc>
Neuron pair_to_neuron(const PairNeuron& p, RowSrc&& row_src, ColSrc&& col_src) {
  Neuron n;
  n.bias = p.bias;
  for (std::size_t i = 0; i < p.w_row.size(); ++i) {
    if (p.w_row[i] == 0.0) continue;
    for (auto in : row_src(i)) {
      in.weight = p.w_row[i];
      n.inputs.push_back(in);
    }
  }
  for (std::size_t j = 0; j < p.w_col.size(); ++j) {
    if (p.w_col[j] == 0.0) continue;
    for (auto in : col_src(j)) {
      in.weight = p.w_col[j];
      n.inputs.push_back(in);
    }
  }
  return n;
}

NetInput from(std::int32_t source, std::size_t index, double weight = 1.0) {
  return {source, static_cast<std::uint32_t>(index), weight};
}

// Final sublayer: data cell (j, y, k) = candidate (j, y, k) AND symbol y.
Sublayer symbol_conjunction(const StateCode& code, std::int32_t candidates) {
  Sublayer out(code.data_size());
  for (SymbolId y = 0; y < code.n_symbols; ++y) {
    for (std::size_t j = 0; j < code.components(); ++j) {
      for (std::size_t k = 0; k < code.base; ++k) {
        const std::size_t c = code.cell(j, y, k);
        out[c].bias = -1.0;
        out[c].inputs = {from(candidates, c), from(kSourceSymbol, y)};
      }
    }
  }
  return out;
}

}  // namespace

BinMatrix parent_matrix(const Wfsa& a, const TwoHotCode& code, std::size_t j,
                        std::size_t k, SymbolId y) {
  if (j >= 2) throw InvalidArgument("two-hot component out of range");
  BinMatrix m(code.s);
  for (const auto& t : a.transitions()) {
    if (t.sym != y || code.encode(t.dst)[j] != k) continue;
    auto p = code.encode(t.src);
    m.set(p[0], p[1]);
  }
  return m;
}

BinMatrix parent_matrix(const Wfsa& a, const FourHotCode& code, std::size_t j,
                        std::size_t k, SymbolId y) {
  if (j >= 4) throw InvalidArgument("four-hot component out of range");
  const std::size_t r = code.r;
  BinMatrix m(r * r);
  for (const auto& t : a.transitions()) {
    if (t.sym != y || code.encode(t.dst)[j] != k) continue;
    auto p = code.encode(t.src);
    m.set(p[2] + r * p[3], p[0] + r * p[1]);
  }
  return m;
}

DewdneyBuild build_dewdney(const Wfsa& a) {
  require_dfa(a, true);
  const std::size_t S = a.num_symbols();
  TwoHotCode code(a.num_states());
  const std::size_t s = code.s;
  StateCode sc{CodeKind::kTwoHot, a.num_states(), S, s, {}};
  DewdneyBuild out{net_shell(a, NetMethod::kDewdney, sc), code, {}};

  // Pair input (i, j) = (hi digit, lo digit), read from every symbol block.
  auto row_src = [&](std::size_t i) {
    std::vector<NetInput> v;
    for (SymbolId b = 0; b < S; ++b) v.push_back(from(kSourceData, sc.cell(0, b, i)));
    return v;
  };
  auto col_src = [&](std::size_t j) {
    std::vector<NetInput> v;
    for (SymbolId b = 0; b < S; ++b) v.push_back(from(kSourceData, sc.cell(1, b, j)));
    return v;
  };

  Sublayer factors, ands, ors(sc.data_size());
  for (SymbolId y = 0; y < S; ++y) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < s; ++k) {
        CoverPart<LineDetector> part;
        part.component = j;
        part.symbol = y;
        part.value = k;
        part.matrix = parent_matrix(a, code, j, k, y);
        part.cover = line_cover(part.matrix);
        Neuron& cand = ors[sc.cell(j, y, k)];
        for (const auto& line : part.cover) {
          LineDetector d = detect_line(line);
          if (d.factors.size() == 1) {
            cand.inputs.push_back(from(0, factors.size()));
            factors.push_back(pair_to_neuron(d.factors[0], row_src, col_src));
          } else {
            Neuron conj;
            conj.bias = -static_cast<double>(d.factors.size() - 1);
            for (const auto& f : d.factors) {
              conj.inputs.push_back(from(0, factors.size()));
              factors.push_back(pair_to_neuron(f, row_src, col_src));
            }
            cand.inputs.push_back(from(1, ands.size()));
            ands.push_back(std::move(conj));
          }
          part.detectors.push_back(std::move(d));
        }
        out.parts.push_back(std::move(part));
      }
    }
  }
  out.net.layers = {std::move(factors), std::move(ands), std::move(ors),
                    symbol_conjunction(sc, 2)};
  out.net.validate();
  return out;
}

namespace {

std::size_t indyk_units(const Wfsa& a, const FourHotCode& code) {
  const std::size_t r = code.r, S = a.num_symbols();
  std::size_t units = 2 * r * r + 2 * 4 * S * r;
  for (SymbolId y = 0; y < S; ++y) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        units += 3 * nondecreasing_cover(parent_matrix(a, code, j, k, y)).size();
      }
    }
  }
  return units;
}

}  // namespace

IndykBuild build_indyk(const Wfsa& a, std::uint64_t seed, std::size_t max_tries) {
  require_dfa(a, true);
  if (max_tries < 1) throw InvalidArgument("max_tries must be positive");
  const std::size_t n = a.num_states(), S = a.num_symbols();

  std::vector<StateId> best_perm;
  std::size_t best_units = 0, best_try = 0;
  std::vector<std::size_t> try_units;
  for (std::size_t t = 0; t < max_tries; ++t) {
    std::vector<StateId> perm(n);
    std::iota(perm.begin(), perm.end(), StateId{0});
    if (t > 0) {
      SplitMix64 rng(seed + t);
      for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    const std::size_t units = indyk_units(a, FourHotCode(n, perm));
    try_units.push_back(units);
    if (t == 0 || units < best_units) {
      best_units = units;
      best_try = t;
      best_perm = std::move(perm);
    }
  }

  FourHotCode code(n, best_perm);
  const std::size_t r = code.r, rr = r * r;
  StateCode sc{CodeKind::kFourHot, n, S, r, best_perm};
  IndykBuild out{net_shell(a, NetMethod::kIndyk, sc), code, {}, best_try,
                 std::move(try_units)};

  // Sublayer 0 turns the four-hot code into two one-hot halves: unit
  // l3 + r l4 (row code) and rr + l1 + r l2 (column code).
  Sublayer convert(2 * rr);
  for (std::size_t hi = 0; hi < r; ++hi) {
    for (std::size_t lo = 0; lo < r; ++lo) {
      Neuron& row = convert[lo + r * hi];
      Neuron& col = convert[rr + lo + r * hi];
      row.bias = col.bias = -1.0;
      for (SymbolId b = 0; b < S; ++b) {
        row.inputs.push_back(from(kSourceData, sc.cell(2, b, lo)));
        row.inputs.push_back(from(kSourceData, sc.cell(3, b, hi)));
        col.inputs.push_back(from(kSourceData, sc.cell(0, b, lo)));
        col.inputs.push_back(from(kSourceData, sc.cell(1, b, hi)));
      }
    }
  }
  auto row_src = [](std::size_t i) { return std::vector<NetInput>{from(0, i)}; };
  auto col_src = [rr](std::size_t j) { return std::vector<NetInput>{from(0, rr + j)}; };

  Sublayer pairs, ands, ors(sc.data_size());
  for (SymbolId y = 0; y < S; ++y) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        CoverPart<EqualityDetector> part;
        part.component = j;
        part.symbol = y;
        part.value = k;
        part.matrix = parent_matrix(a, code, j, k, y);
        part.cover = nondecreasing_cover(part.matrix);
        Neuron& cand = ors[sc.cell(j, y, k)];
        for (const auto& layer : part.cover) {
          EqualityDetector d = detect_nondecreasing(layer);
          Neuron conj;
          conj.bias = -1.0;
          conj.inputs = {from(1, pairs.size()), from(1, pairs.size() + 1)};
          pairs.push_back(pair_to_neuron(d.below(), row_src, col_src));
          pairs.push_back(pair_to_neuron(d.above(), row_src, col_src));
          cand.inputs.push_back(from(2, ands.size()));
          ands.push_back(std::move(conj));
          part.detectors.push_back(std::move(d));
        }
        out.parts.push_back(std::move(part));
      }
    }
  }
  out.net.layers = {std::move(convert), std::move(pairs), std::move(ands),
                    std::move(ors), symbol_conjunction(sc, 3)};
  out.net.validate();
  return out;
}

ThresholdNet build_minsky_net(const Wfsa& a) {
  require_dfa(a, false);
  const std::size_t S = a.num_symbols();
  StateCode sc{CodeKind::kOneHot, a.num_states(), S, 0, {}};
  ThresholdNet net = net_shell(a, NetMethod::kMinsky, sc);
  Sublayer layer(sc.data_size());
  for (auto& n : layer) n.bias = -1.0;
  std::vector<std::uint8_t> reached(sc.data_size(), 0);
  for (const auto& t : a.transitions()) {
    Neuron& n = layer[t.dst * S + t.sym];
    for (SymbolId y = 0; y < S; ++y) n.inputs.push_back(from(kSourceData, t.src * S + y));
    if (!reached[t.dst * S + t.sym]) n.inputs.push_back(from(kSourceSymbol, t.sym));
    reached[t.dst * S + t.sym] = 1;
  }
  net.layers = {std::move(layer)};
  net.validate();
  return net;
}

}  // namespace hfsa
