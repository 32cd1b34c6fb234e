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

// Layered Heaviside networks that track the state of an unweighted DFA, and
// the state codes they keep in their data sub-vector.
//
// One FSA step runs every sublayer in order. A neuron reads the data vector
// left by the previous step, the one-hot input symbol, or the output of an
// earlier sublayer of the same step; the last sublayer's output becomes the
// new data vector.

#ifndef HFSA_THRESHOLD_NET_HPP_
#define HFSA_THRESHOLD_NET_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hfsa/alphabet.hpp"

namespace hfsa {

// q -> (q / s, q mod s) with s = ceil(sqrt(n_states)).
struct TwoHotCode {
  std::size_t s = 1;

  explicit TwoHotCode(std::size_t n_states = 1);
  std::array<std::size_t, 2> encode(StateId q) const;
  StateId decode(std::size_t hi, std::size_t lo) const { return StateId(hi * s + lo); }
};

// q -> (l1, l2, l3, l4), l_j = floor(p(q) / r^(j-1)) mod r with
// r = ceil(n_states^(1/4)) and p a permutation of the states.
struct FourHotCode {
  std::size_t r = 1;
  std::vector<StateId> permutation;  // p(q)
  std::vector<StateId> inverse;

  explicit FourHotCode(std::size_t n_states = 1);
  // Throws InvalidArgument unless `permutation` is a bijection.
  FourHotCode(std::size_t n_states, std::vector<StateId> permutation);
  std::array<std::size_t, 4> encode(StateId q) const;
  // kNoState when the digits name no state.
  StateId decode(const std::array<std::size_t, 4>& digits) const;
};

std::size_t ceil_root(std::size_t n, int k);

enum class CodeKind { kOneHot, kTwoHot, kFourHot };
const char* code_kind_name(CodeKind k);

// The data sub-vector: `components` code digits of width `base` per symbol
// block; one-hot codes use a single block of |Q| |alphabet| cells indexed by
// (state, previous symbol).
struct StateCode {
  CodeKind kind = CodeKind::kOneHot;
  std::size_t n_states = 0;
  std::size_t n_symbols = 0;
  std::size_t base = 0;                // s or r; unused for one-hot
  std::vector<StateId> permutation;  // four-hot only

  std::size_t components() const;
  std::size_t data_size() const;
  // Index of digit j = k in symbol block y.
  std::size_t cell(std::size_t j, SymbolId y, std::size_t k) const;
  std::vector<std::uint8_t> encode(StateId q, SymbolId block) const;
  // kNoState for the all-zero one-hot vector; throws SimulationCorrupt for
  // anything else that is not a valid code.
  StateId decode(std::span<const std::uint8_t> data) const;
  bool operator==(const StateCode&) const = default;
};

inline constexpr std::int32_t kSourceData = -1;
inline constexpr std::int32_t kSourceSymbol = -2;

struct NetInput {
  std::int32_t source = kSourceData;  // kSourceData, kSourceSymbol or a sublayer
  std::uint32_t index = 0;
  double weight = 0.0;
  bool operator==(const NetInput&) const = default;
};

struct Neuron {
  double bias = 0.0;
  std::vector<NetInput> inputs;
  bool operator==(const Neuron&) const = default;
};

using Sublayer = std::vector<Neuron>;

enum class NetMethod { kMinsky, kDewdney, kIndyk };
const char* net_method_name(NetMethod m);
NetMethod parse_net_method(std::string_view name);

struct NetSize {
  std::size_t data_cells = 0;
  std::size_t processing_cells = 0;
  std::size_t sublayers = 0;
  std::size_t total_units() const { return data_cells + processing_cells; }
};

struct ThresholdNet {
  NetMethod method = NetMethod::kMinsky;
  Alphabet alphabet;
  StateCode code;
  StateId initial = 0;
  std::vector<std::uint8_t> finals;  // per state
  std::vector<std::uint8_t> initial_data;
  std::vector<Sublayer> layers;

  // Throws ShapeError / InvalidArgument for dangling references.
  void validate() const;
  NetSize size() const;
  bool operator==(const ThresholdNet&) const = default;
};

// Data vector after one full step.
std::vector<std::uint8_t> net_step(const ThresholdNet& net,
                                   std::span<const std::uint8_t> data,
                                   SymbolId y);

// Decoded state after every prefix of y, starting with the empty prefix.
// kNoState marks the dead one-hot code. Throws SimulationCorrupt.
std::vector<StateId> simulate_net(const ThresholdNet& net,
                                  std::span<const SymbolId> y);

// 1 if the final decoded state is accepting, else 0.
bool net_accepts(const ThresholdNet& net, std::span<const SymbolId> y);

}  // namespace hfsa

#endif  // HFSA_THRESHOLD_NET_HPP_
