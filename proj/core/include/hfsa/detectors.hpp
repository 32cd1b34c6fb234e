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

// Threshold detectors for binary matrices. A detector reads a two-hot pair
// input (one active row unit i, one active column unit j) and must fire iff
// M(i, j) = 1.

#ifndef HFSA_DETECTORS_HPP_
#define HFSA_DETECTORS_HPP_

#include <cstddef>
#include <vector>

#include "hfsa/bin_matrix.hpp"

namespace hfsa {

// w_row[i] + w_col[j] + bias, thresholded strictly at zero.
struct PairNeuron {
  std::vector<double> w_row, w_col;
  double bias = 0.0;

  double preactivation(std::size_t i, std::size_t j) const {
    return w_row[i] + w_col[j] + bias;
  }
  bool fires(std::size_t i, std::size_t j) const { return preactivation(i, j) > 0.0; }
};

// Northwestern detector in permuted column coordinates: alpha[i] is the
// number of leading (permuted) columns set in row i and col_rank[c] is the
// position of column c in the permutation. Fires iff rank(j) < alpha[i].
PairNeuron northwestern_neuron(const std::vector<std::size_t>& alpha,
                               const std::vector<std::size_t>& col_rank);

// Row and column matrices use one northwestern neuron; transversals use a
// lower and an upper triangular factor joined by an AND unit.
struct LineDetector {
  LineKind kind = LineKind::kRow;
  std::vector<PairNeuron> factors;

  bool fires(std::size_t i, std::size_t j) const;
  // Neurons in the circuit (the AND counts as one).
  std::size_t units() const { return factors.size() == 1 ? 1 : factors.size() + 1; }
};

// Throws InvalidArgument when M is not a (non-zero) line matrix.
LineDetector detect_line(const BinMatrix& m);

// Equality detector for a matrix with at most one one per column: s(i, j) =
// w_row[i] + w_col[j] + bias is zero exactly on the ones. It is realised by
// the pair H(-s + 1), H(s + 1) and an AND unit.
struct EqualityDetector {
  PairNeuron sum;

  PairNeuron below() const;  // H(-s + 1)
  PairNeuron above() const;  // H(s + 1)
  bool fires(std::size_t i, std::size_t j) const;
  std::size_t units() const { return 3; }
};

// Throws InvalidArgument unless M is a non-zero non-decreasing matrix.
EqualityDetector detect_nondecreasing(const BinMatrix& m);

// Number of (i, j) pairs where the detector disagrees with M.
template <typename Detector>
std::size_t count_mismatches(const Detector& d, const BinMatrix& m) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) bad += d.fires(i, j) != m.get(i, j);
  }
  return bad;
}

}  // namespace hfsa

#endif  // HFSA_DETECTORS_HPP_
