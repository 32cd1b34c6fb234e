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

#include "hfsa/threshold_net.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hfsa/errors.hpp"

namespace hfsa {

std::size_t ceil_root(std::size_t n, int k) {
  std::size_t r = 1;
  auto pow = [k](std::size_t x) {
    std::size_t p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    return p;
  };
  while (pow(r) < n) ++r;
  return r;
}

TwoHotCode::TwoHotCode(std::size_t n_states) : s(ceil_root(n_states, 2)) {}

std::array<std::size_t, 2> TwoHotCode::encode(StateId q) const {
  return {q / s, q % s};
}

FourHotCode::FourHotCode(std::size_t n_states)
    : r(ceil_root(n_states, 4)), permutation(n_states), inverse(n_states) {
  std::iota(permutation.begin(), permutation.end(), StateId{0});
  inverse = permutation;
}

FourHotCode::FourHotCode(std::size_t n_states, std::vector<StateId> perm)
    : r(ceil_root(n_states, 4)), permutation(std::move(perm)), inverse(n_states, kNoState) {
  if (permutation.size() != n_states) throw InvalidArgument("permutation has the wrong size");
  for (StateId q = 0; q < n_states; ++q) {
    StateId p = permutation[q];
    if (p >= n_states || inverse[p] != kNoState) {
      throw InvalidArgument("not a permutation of the states");
    }
    inverse[p] = q;
  }
}

std::array<std::size_t, 4> FourHotCode::encode(StateId q) const {
  std::size_t p = permutation.at(q);
  std::array<std::size_t, 4> out{};
  for (auto& d : out) {
    d = p % r;
    p /= r;
  }
  return out;
}

StateId FourHotCode::decode(const std::array<std::size_t, 4>& digits) const {
  std::size_t p = 0;
  for (int j = 3; j >= 0; --j) p = p * r + digits[j];
  return p < inverse.size() ? inverse[p] : kNoState;
}

const char* code_kind_name(CodeKind k) {
  switch (k) {
    case CodeKind::kOneHot: return "onehot";
    case CodeKind::kTwoHot: return "twohot";
    case CodeKind::kFourHot: return "fourhot";
  }
  return "?";
}

std::size_t StateCode::components() const {
  switch (kind) {
    case CodeKind::kOneHot: return 1;
    case CodeKind::kTwoHot: return 2;
    case CodeKind::kFourHot: return 4;
  }
  return 0;
}

std::size_t StateCode::data_size() const {
  if (kind == CodeKind::kOneHot) return n_states * n_symbols;
  return components() * n_symbols * base;
}

std::size_t StateCode::cell(std::size_t j, SymbolId y, std::size_t k) const {
  return (y * components() + j) * base + k;
}

std::vector<std::uint8_t> StateCode::encode(StateId q, SymbolId block) const {
  if (q >= n_states || block >= n_symbols) throw InvalidArgument("state or symbol out of range");
  std::vector<std::uint8_t> data(data_size(), 0);
  if (kind == CodeKind::kOneHot) {
    data[q * n_symbols + block] = 1;
  } else if (kind == CodeKind::kTwoHot) {
    auto d = TwoHotCode(n_states).encode(q);
    for (std::size_t j = 0; j < 2; ++j) data[cell(j, block, d[j])] = 1;
  } else {
    auto d = FourHotCode(n_states, permutation).encode(q);
    for (std::size_t j = 0; j < 4; ++j) data[cell(j, block, d[j])] = 1;
  }
  return data;
}

StateId StateCode::decode(std::span<const std::uint8_t> data) const {
  if (data.size() != data_size()) throw SimulationCorrupt("data vector has the wrong size");
  std::vector<std::size_t> hot;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i]) hot.push_back(i);
  }
  if (kind == CodeKind::kOneHot) {
    if (hot.empty()) return kNoState;
    if (hot.size() != 1) throw SimulationCorrupt("one-hot data has several active cells");
    return static_cast<StateId>(hot[0] / n_symbols);
  }
  const std::size_t m = components();
  if (hot.size() != m) {
    throw SimulationCorrupt("data has " + std::to_string(hot.size()) +
                            " active cells, expected " + std::to_string(m));
  }
  // Cells are ordered by (block, component, digit), so a valid code lists
  // components 0..m-1 of a single block in order.
  const std::size_t block = hot[0] / (m * base);
  std::array<std::size_t, 4> digits{};
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t b = hot[j] / (m * base);
    const std::size_t comp = (hot[j] / base) % m;
    if (b != block || comp != j) throw SimulationCorrupt("data is not a valid state code");
    digits[j] = hot[j] % base;
  }
  StateId q = kNoState;
  if (kind == CodeKind::kTwoHot) {
    q = TwoHotCode(n_states).decode(digits[0], digits[1]);
    if (q >= n_states) q = kNoState;
  } else {
    q = FourHotCode(n_states, permutation).decode(digits);
  }
  if (q == kNoState) throw SimulationCorrupt("data encodes no state");
  return q;
}

const char* net_method_name(NetMethod m) {
  switch (m) {
    case NetMethod::kMinsky: return "minsky";
    case NetMethod::kDewdney: return "dewdney";
    case NetMethod::kIndyk: return "indyk";
  }
  return "?";
}

NetMethod parse_net_method(std::string_view name) {
  if (name == "minsky") return NetMethod::kMinsky;
  if (name == "dewdney") return NetMethod::kDewdney;
  if (name == "indyk") return NetMethod::kIndyk;
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

void ThresholdNet::validate() const {
  if (code.n_symbols != alphabet.size()) throw ShapeError("code and alphabet disagree");
  if (finals.size() != code.n_states) throw ShapeError("finals must list every state");
  if (initial_data.size() != code.data_size()) throw ShapeError("initial data has the wrong size");
  if (layers.empty()) throw ShapeError("a net needs at least one sublayer");
  if (layers.back().size() != code.data_size()) {
    throw ShapeError("the last sublayer must produce the data vector");
  }
  if (code.kind == CodeKind::kFourHot) FourHotCode(code.n_states, code.permutation);
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (const auto& n : layers[l]) {
      if (!std::isfinite(n.bias)) throw InvalidArgument("non-finite bias");
      for (const auto& in : n.inputs) {
        std::size_t limit = 0;
        if (in.source == kSourceData) {
          limit = code.data_size();
        } else if (in.source == kSourceSymbol) {
          limit = alphabet.size();
        } else if (in.source >= 0 && static_cast<std::size_t>(in.source) < l) {
          limit = layers[in.source].size();
        } else {
          throw InvalidArgument("input from sublayer " + std::to_string(in.source) +
                                " in sublayer " + std::to_string(l));
        }
        if (in.index >= limit) throw InvalidArgument("input index out of range");
        if (!std::isfinite(in.weight)) throw InvalidArgument("non-finite weight");
      }
    }
  }
  code.decode(initial_data);
}

NetSize ThresholdNet::size() const {
  NetSize s;
  s.data_cells = code.data_size();
  s.sublayers = layers.size();
  for (std::size_t l = 0; l + 1 < layers.size(); ++l) s.processing_cells += layers[l].size();
  return s;
}

std::vector<std::uint8_t> net_step(const ThresholdNet& net,
                                   std::span<const std::uint8_t> data, SymbolId y) {
  if (y >= net.alphabet.size()) {
    throw UnknownSymbol("symbol id " + std::to_string(y) + " out of range");
  }
  std::vector<std::vector<std::uint8_t>> out(net.layers.size());
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    out[l].resize(net.layers[l].size());
    for (std::size_t i = 0; i < net.layers[l].size(); ++i) {
      const Neuron& n = net.layers[l][i];
      double x = n.bias;
      for (const auto& in : n.inputs) {
        bool v;
        if (in.source == kSourceData) {
          v = data[in.index];
        } else if (in.source == kSourceSymbol) {
          v = in.index == y;
        } else {
          v = out[in.source][in.index];
        }
        if (v) x += in.weight;
      }
      if (std::abs(x) <= 1e-9) x = 0.0;
      out[l][i] = x > 0.0;
    }
  }
  return std::move(out.back());
}

std::vector<StateId> simulate_net(const ThresholdNet& net, std::span<const SymbolId> y) {
  std::vector<StateId> traj;
  traj.reserve(y.size() + 1);
  std::vector<std::uint8_t> data = net.initial_data;
  traj.push_back(net.code.decode(data));
  for (SymbolId s : y) {
    data = net_step(net, data, s);
    traj.push_back(net.code.decode(data));
  }
  return traj;
}

bool net_accepts(const ThresholdNet& net, std::span<const SymbolId> y) {
  StateId q = simulate_net(net, y).back();
  return q != kNoState && net.finals[q];
}

}  // namespace hfsa
