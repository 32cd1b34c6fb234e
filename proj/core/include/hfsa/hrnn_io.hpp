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

// Text format for HRNN language models. Tokens are whitespace-separated and
// lines starting with '#' are comments:
//
//   hrnn-lm 1
//   alphabet 2 a b
//   projection softmax          (or sparsemax)
//   D 6
//   R 2
//   U 6 6 <36 values, row-major>
//   V 6 2 <12 values>
//   b 6 <6 values>
//   h0 6 <6 values, 0 or 1>
//   E 3 6 <18 values; -inf allowed here only>
//   embed 2 2 <values>          optional; R x |alphabet|, column y embeds y
//   end
//
// Values print as shortest round-trip decimals, so finite models round-trip
// bit-exactly.

#ifndef HFSA_HRNN_IO_HPP_
#define HFSA_HRNN_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "hfsa/hrnn.hpp"

namespace hfsa {

inline constexpr std::string_view kHrnnMagic = "hrnn-lm";

// Throws ParseError (or ShapeError/InvalidArgument from model validation).
HrnnLm read_hrnn(std::istream& in);
HrnnLm parse_hrnn(std::string_view text);
HrnnLm load_hrnn(const std::string& path);

void write_hrnn(std::ostream& out, const HrnnLm& lm);
std::string print_hrnn(const HrnnLm& lm);
void save_hrnn(const std::string& path, const HrnnLm& lm);

}  // namespace hfsa

#endif  // HFSA_HRNN_IO_HPP_
