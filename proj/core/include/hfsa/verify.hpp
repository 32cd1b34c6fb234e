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

// Brute-force oracles: weak-equivalence checks between language models and
// probability-mass audits, by exhaustive enumeration of short strings.

#ifndef HFSA_VERIFY_HPP_
#define HFSA_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hfsa/alphabet.hpp"
#include "hfsa/hrnn.hpp"
#include "hfsa/threshold_net.hpp"
#include "hfsa/wfsa.hpp"

namespace hfsa {

// String -> weight. Implementations must be safe to call concurrently.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual const Alphabet& alphabet() const = 0;
  virtual double score(std::span<const SymbolId> y) const = 0;
};

class WfsaScorer : public Scorer {
 public:
  explicit WfsaScorer(Wfsa a) : a_(std::move(a)) {}
  const Alphabet& alphabet() const override { return a_.alphabet(); }
  double score(std::span<const SymbolId> y) const override { return stringsum(a_, y); }

 private:
  Wfsa a_;
};

class HrnnScorer : public Scorer {
 public:
  explicit HrnnScorer(HrnnLm lm) : lm_(std::move(lm)) {}
  const Alphabet& alphabet() const override { return lm_.alphabet(); }
  double score(std::span<const SymbolId> y) const override { return score_string(lm_, y); }

 private:
  HrnnLm lm_;
};

// Indicator of the language recognised by a threshold network.
class NetAcceptorScorer : public Scorer {
 public:
  explicit NetAcceptorScorer(ThresholdNet net) : net_(std::move(net)) {}
  const Alphabet& alphabet() const override { return net_.alphabet; }
  double score(std::span<const SymbolId> y) const override {
    return net_accepts(net_, y) ? 1.0 : 0.0;
  }

 private:
  ThresholdNet net_;
};

struct EquivReport {
  double max_abs_diff = 0.0;
  std::vector<SymbolId> worst;  // ids in the first scorer's alphabet
  std::string worst_string;
  std::uint64_t n_checked = 0;
  bool pass = true;
};

// Compares the two scorers on every string of length <= max_len, in
// length-lexicographic order over the first scorer's alphabet. The worst
// string is the first one attaining the largest difference. Symbols are
// matched by name; throws AlphabetMismatch when the name sets differ.
// `workers` > 1 splits the enumeration by first symbol.
EquivReport brute_equiv(const Scorer& a, const Scorer& b, std::size_t max_len,
                        double tol, std::size_t workers = 1);

struct MassReport {
  std::vector<double> per_length;  // total weight of strings of length k
  std::vector<double> cumulative;
};

MassReport mass_report(const Scorer& s, std::size_t max_len);

// Calls f(span) for every string of length exactly `len`, in lexicographic
// order by symbol id.
template <typename F>
void for_each_string(std::size_t n_symbols, std::size_t len, F&& f) {
  std::vector<SymbolId> y(len, 0);
  if (len > 0 && n_symbols == 0) return;
  while (true) {
    f(std::span<const SymbolId>(y));
    std::size_t i = len;
    while (i > 0 && y[i - 1] + 1 == n_symbols) y[--i] = 0;
    if (i == 0) return;
    ++y[i - 1];
  }
}

}  // namespace hfsa

#endif  // HFSA_VERIFY_HPP_
