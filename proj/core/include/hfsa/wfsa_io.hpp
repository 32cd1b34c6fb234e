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
//
// Line-oriented text format for automata:
//
//   # comment
//   @alphabet a b c        optional; declares symbols (and their order) up front
//   @states 4              optional; declares states that appear on no line
//   @init 0 1              initial weight (weight defaults to 1)
//   0 1 a 0.6              transition: src dst symbol [weight]
//   2 0.3                  final weight: state [weight]
//
// Symbols not declared by @alphabet are interned in order of first use. The
// number of states is one more than the largest state id mentioned.

#ifndef HFSA_WFSA_IO_HPP_
#define HFSA_WFSA_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "hfsa/wfsa.hpp"

namespace hfsa {

// Throws ParseError.
Wfsa read_wfsa(std::istream& in);
Wfsa parse_wfsa(std::string_view text);
Wfsa load_wfsa(const std::string& path);

// Emits @alphabet and @states so that parse_wfsa(print_wfsa(a)) == a. Weights
// are omitted for unweighted automata.
void write_wfsa(std::ostream& out, const Wfsa& a);
std::string print_wfsa(const Wfsa& a);
void save_wfsa(const std::string& path, const Wfsa& a);

}  // namespace hfsa

#endif  // HFSA_WFSA_IO_HPP_
