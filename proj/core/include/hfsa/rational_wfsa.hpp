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

// Exact-rational automata for bit-exact reference stringsums.

#ifndef HFSA_RATIONAL_WFSA_HPP_
#define HFSA_RATIONAL_WFSA_HPP_

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfsa/wfsa.hpp"

namespace hfsa {

using Rational = boost::multiprecision::mpq_rational;

// Exact value of a decimal ("0.6", "-1.5e-3") or fraction ("3/5") token.
// Throws ParseError.
Rational parse_rational(std::string_view token);
// The rational named by the shortest decimal that round-trips to x, so
// 0.6 maps to 3/5 rather than to the binary value of the double.
Rational to_rational(double x);
double to_double(const Rational& x);
std::string to_string(const Rational& x);

struct RationalTransition {
  StateId src = 0;
  SymbolId sym = 0;
  Rational weight;
  StateId dst = 0;
};

struct RationalWfsa {
  Alphabet alphabet;
  std::size_t n_states = 0;
  std::vector<RationalTransition> transitions;
  std::vector<Rational> initial, final_weights;
};

RationalWfsa to_rational(const Wfsa& a);
// Same text format as read_wfsa, but weights are parsed exactly.
RationalWfsa read_rational_wfsa(std::istream& in);
RationalWfsa parse_rational_wfsa(std::string_view text);
RationalWfsa load_rational_wfsa(const std::string& path);

// Forward algorithm in exact arithmetic. Throws UnknownSymbol.
Rational stringsum_exact(const RationalWfsa& a, std::span<const SymbolId> y);
Rational stringsum_exact(const RationalWfsa& a, std::string_view y);

}  // namespace hfsa

#endif  // HFSA_RATIONAL_WFSA_HPP_
