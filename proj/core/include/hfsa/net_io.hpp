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

// Text format for threshold networks:
//
//   threshold-net 1
//   method dewdney              (minsky | dewdney | indyk)
//   alphabet 2 a b
//   states 4
//   initial 0
//   finals 1 3                  count, then the final states
//   code twohot 2               onehot | twohot s | fourhot r p(0) .. p(n-1)
//   data 16 2 0 2               size, count, then the active cells
//   layers 4
//   layer 5                     neuron count
//   u -3 2 d 0 1 y 1 2          bias, input count, (source index weight)*
//   ...
//   end
//
// Sources are `d` (data), `y` (input symbol) or an earlier sublayer number.

#ifndef HFSA_NET_IO_HPP_
#define HFSA_NET_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "hfsa/threshold_net.hpp"

namespace hfsa {

inline constexpr std::string_view kNetMagic = "threshold-net";

// Throws ParseError (and the net's own validation errors).
ThresholdNet read_net(std::istream& in);
ThresholdNet parse_net(std::string_view text);
ThresholdNet load_net(const std::string& path);

void write_net(std::ostream& out, const ThresholdNet& net);
std::string print_net(const ThresholdNet& net);
void save_net(const std::string& path, const ThresholdNet& net);

}  // namespace hfsa

#endif  // HFSA_NET_IO_HPP_
