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

// Compressed Heaviside encodings of unweighted DFAs. Dewdney's construction
// keeps a two-hot state code and detects each component-activating matrix by
// a line cover; Indyk's keeps a four-hot code and uses non-decreasing covers.
// Transition weights are ignored: a state is final iff its final weight is
// non-zero.

#ifndef HFSA_COMPRESS_HPP_
#define HFSA_COMPRESS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hfsa/bin_matrix.hpp"
#include "hfsa/detectors.hpp"
#include "hfsa/threshold_net.hpp"
#include "hfsa/wfsa.hpp"

namespace hfsa {

inline constexpr std::size_t kDefaultIndykTries = 64;

// Entry (hi(p), lo(p)) is set iff p --y--> q' with component j of code(q')
// equal to k.
BinMatrix parent_matrix(const Wfsa& a, const TwoHotCode& code, std::size_t j,
                        std::size_t k, SymbolId y);

// r^2 x r^2 matrix over (l3 + r l4, l1 + r l2) of the parents p, with the
// same selection rule on the four-hot code.
BinMatrix parent_matrix(const Wfsa& a, const FourHotCode& code, std::size_t j,
                        std::size_t k, SymbolId y);

template <typename Detector>
struct CoverPart {
  std::size_t component = 0;
  SymbolId symbol = 0;
  std::size_t value = 0;
  BinMatrix matrix;
  std::vector<BinMatrix> cover;
  std::vector<Detector> detectors;  // one per cover element
};

struct DewdneyBuild {
  ThresholdNet net;
  TwoHotCode code;
  std::vector<CoverPart<LineDetector>> parts;
};

struct IndykBuild {
  ThresholdNet net;
  FourHotCode code;
  std::vector<CoverPart<EqualityDetector>> parts;
  std::size_t best_try = 0;
  std::vector<std::size_t> try_units;  // total units per permutation try
};

// Both require a deterministic, complete automaton (PreconditionError).
DewdneyBuild build_dewdney(const Wfsa& a);
// Try 0 uses the identity permutation, later tries seeded shuffles. Keeps the
// fewest units, earliest try on ties.
IndykBuild build_indyk(const Wfsa& a, std::uint64_t seed = 0,
                       std::size_t max_tries = kDefaultIndykTries);
// One sublayer over the one-hot (state, symbol) code; incomplete automata
// are allowed and fall into the all-zero dead code.
ThresholdNet build_minsky_net(const Wfsa& a);

}  // namespace hfsa

#endif  // HFSA_COMPRESS_HPP_
