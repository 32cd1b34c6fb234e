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

#include "hfsa/rational_wfsa.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hfsa/errors.hpp"
#include "text_util.hpp"
#include "wfsa_reader.hpp"

namespace hfsa {

using boost::multiprecision::mpz_int;

namespace {

Rational parse_decimal(std::string_view tok, int line) {
  auto bad = [&] { return ParseError("bad number '" + std::string(tok) + "'", line); };
  std::size_t i = 0;
  bool neg = false;
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) neg = tok[i++] == '-';
  mpz_int digits = 0;
  long long exp10 = 0;
  bool any = false;
  for (; i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])); ++i) {
    digits = digits * 10 + (tok[i] - '0');
    any = true;
  }
  if (i < tok.size() && tok[i] == '.') {
    for (++i; i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])); ++i) {
      digits = digits * 10 + (tok[i] - '0');
      --exp10;
      any = true;
    }
  }
  if (!any) throw bad();
  if (i < tok.size() && (tok[i] == 'e' || tok[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) eneg = tok[i++] == '-';
    long long e = 0;
    bool edig = false;
    for (; i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])); ++i) {
      if (e > 100000) throw bad();
      e = e * 10 + (tok[i] - '0');
      edig = true;
    }
    if (!edig) throw bad();
    exp10 += eneg ? -e : e;
  }
  if (i != tok.size()) throw bad();
  mpz_int scale = boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
  Rational r = exp10 < 0 ? Rational(digits, scale) : Rational(digits * scale);
  return neg ? Rational(-r) : r;
}

Rational parse_rational_at(std::string_view tok, int line) {
  auto slash = tok.find('/');
  if (slash == std::string_view::npos) return parse_decimal(tok, line);
  Rational num = parse_decimal(tok.substr(0, slash), line);
  Rational den = parse_decimal(tok.substr(slash + 1), line);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(tok) + "'", line);
  return num / den;
}

}  // namespace

Rational parse_rational(std::string_view token) { return parse_rational_at(token, 0); }

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("non-finite value has no rational form");
  return parse_decimal(detail::format_shortest(x), 0);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x) {
  std::ostringstream out;
  out << numerator(x);
  if (denominator(x) != 1) out << '/' << denominator(x);
  return out.str();
}

RationalWfsa to_rational(const Wfsa& a) {
  RationalWfsa r;
  r.alphabet = a.alphabet();
  r.n_states = a.num_states();
  for (const auto& t : a.transitions()) {
    r.transitions.push_back({t.src, t.sym, to_rational(t.weight), t.dst});
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    r.initial.push_back(to_rational(a.initial(q)));
    r.final_weights.push_back(to_rational(a.final_weight(q)));
  }
  return r;
}

RationalWfsa read_rational_wfsa(std::istream& in) {
  auto parts = detail::read_wfsa_parts<Rational>(in, parse_rational_at, Rational(0),
                                                 Rational(1));
  RationalWfsa r;
  r.alphabet = std::move(parts.alphabet);
  r.n_states = parts.n_states;
  for (auto& t : parts.arcs) r.transitions.push_back({t.src, t.sym, std::move(t.weight), t.dst});
  r.initial = std::move(parts.initial);
  r.final_weights = std::move(parts.final_weights);
  return r;
}

RationalWfsa parse_rational_wfsa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_rational_wfsa(in);
}

RationalWfsa load_rational_wfsa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_rational_wfsa(in);
}

Rational stringsum_exact(const RationalWfsa& a, std::span<const SymbolId> y) {
  std::vector<Rational> alpha = a.initial;
  for (SymbolId s : y) {
    if (s >= a.alphabet.size()) {
      throw UnknownSymbol("symbol id " + std::to_string(s) + " out of range");
    }
    std::vector<Rational> next(a.n_states);
    for (const auto& t : a.transitions) {
      if (t.sym == s && alpha[t.src] != 0) next[t.dst] += alpha[t.src] * t.weight;
    }
    alpha = std::move(next);
  }
  Rational total = 0;
  for (std::size_t q = 0; q < a.n_states; ++q) total += alpha[q] * a.final_weights[q];
  return total;
}

Rational stringsum_exact(const RationalWfsa& a, std::string_view y) {
  return stringsum_exact(a, a.alphabet.parse(y));
}

}  // namespace hfsa
