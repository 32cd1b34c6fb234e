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
// Shared tokenizing and number formatting for the text formats. Internal.

#ifndef HFSA_SRC_TEXT_UTIL_HPP_
#define HFSA_SRC_TEXT_UTIL_HPP_

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hfsa/errors.hpp"

namespace hfsa::detail {

// Shortest decimal string that parses back to exactly `x`. -inf prints as
// "-inf".
inline std::string format_shortest(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == '\n')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '\n') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Accepts decimal/scientific notation and "p/q" fractions. Infinities and
// NaN are rejected unless allow_neg_inf is set, in which case "-inf" parses.
inline double parse_real(std::string_view tok, int line,
                         bool allow_neg_inf = false) {
  if (tok == "-inf") {
    if (allow_neg_inf) return -INFINITY;
    throw ParseError("-inf is not allowed here", line);
  }
  auto slash = tok.find('/');
  if (slash != std::string_view::npos) {
    double num = parse_real(tok.substr(0, slash), line);
    double den = parse_real(tok.substr(slash + 1), line);
    if (den == 0.0) throw ParseError("zero denominator in '" + std::string(tok) + "'", line);
    return num / den;
  }
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError("bad number '" + std::string(tok) + "'", line);
  }
  if (!std::isfinite(v)) {
    throw ParseError("non-finite number '" + std::string(tok) + "'", line);
  }
  return v;
}

inline std::uint64_t parse_count(std::string_view tok, int line) {
  std::uint64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("bad integer '" + std::string(tok) + "'", line);
  }
  return v;
}

// Token stream over a whole file, skipping '#' comment lines. Tracks line
// numbers for error messages.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) {
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      for (auto tok : split_ws(line)) tokens_.push_back({std::string(tok), n});
    }
  }

  bool done() const { return pos_ >= tokens_.size(); }
  int line() const {
    if (tokens_.empty()) return 0;
    return tokens_[pos_ < tokens_.size() ? pos_ : tokens_.size() - 1].line;
  }
  const std::string& peek() const {
    if (done()) throw ParseError("unexpected end of input", line());
    return tokens_[pos_].text;
  }
  std::string next() {
    const std::string& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view word) {
    int at = line();
    std::string t = next();
    if (t != word) {
      throw ParseError("expected '" + std::string(word) + "', got '" + t + "'", at);
    }
  }
  std::uint64_t count() {
    int at = line();
    return parse_count(next(), at);
  }
  double real(bool allow_neg_inf = false) {
    int at = line();
    return parse_real(next(), at, allow_neg_inf);
  }

 private:
  struct Token {
    std::string text;
    int line;
  };
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace hfsa::detail

#endif  // HFSA_SRC_TEXT_UTIL_HPP_
