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

#include "hfsa/detectors.hpp"

#include <algorithm>

#include "hfsa/errors.hpp"

namespace hfsa {

PairNeuron northwestern_neuron(const std::vector<std::size_t>& alpha,
                               const std::vector<std::size_t>& col_rank) {
  const double D = static_cast<double>(col_rank.size());
  PairNeuron n;
  n.w_row.assign(alpha.begin(), alpha.end());
  n.w_col.resize(col_rank.size());
  for (std::size_t c = 0; c < col_rank.size(); ++c) {
    n.w_col[c] = D - static_cast<double>(col_rank[c]);
  }
  n.bias = -D;
  return n;
}

bool LineDetector::fires(std::size_t i, std::size_t j) const {
  return std::all_of(factors.begin(), factors.end(),
                     [&](const PairNeuron& n) { return n.fires(i, j); });
}

namespace {

// Column ranks placing `first` (in ascending order) ahead of the other
// columns.
std::vector<std::size_t> ranks_with_first(std::size_t cols,
                                          const std::vector<std::size_t>& first) {
  std::vector<std::size_t> rank(cols, cols);
  std::size_t next = 0;
  for (auto c : first) rank[c] = next++;
  for (std::size_t c = 0; c < cols; ++c) {
    if (rank[c] == cols) rank[c] = next++;
  }
  return rank;
}

}  // namespace

LineDetector detect_line(const BinMatrix& m) {
  auto kind = line_kind(m);
  if (!kind) throw InvalidArgument("not a line matrix:\n" + m.to_string());
  const auto ones = m.ones();
  LineDetector d;
  d.kind = *kind;
  std::vector<std::size_t> alpha(m.rows(), 0);
  if (*kind == LineKind::kRow) {
    std::vector<std::size_t> cols;
    for (auto [r, c] : ones) cols.push_back(c);
    alpha[ones.front().first] = cols.size();
    d.factors.push_back(northwestern_neuron(alpha, ranks_with_first(m.cols(), cols)));
  } else if (*kind == LineKind::kColumn) {
    for (auto [r, c] : ones) alpha[r] = 1;
    d.factors.push_back(
        northwestern_neuron(alpha, ranks_with_first(m.cols(), {ones.front().second})));
  } else {
    // Support pairs (i_k, j_k) in row order; the lower factor fires iff
    // k(i) >= k(j), the upper one iff k(i) <= k(j).
    const double t = static_cast<double>(ones.size());
    PairNeuron lower{std::vector<double>(m.rows(), 0.0),
                     std::vector<double>(m.cols(), 0.0), -t};
    PairNeuron upper = lower;
    for (std::size_t k = 0; k < ones.size(); ++k) {
      auto [i, j] = ones[k];
      const double kk = static_cast<double>(k);
      lower.w_row[i] = kk + 1;
      lower.w_col[j] = t - kk;
      upper.w_row[i] = t - kk;
      upper.w_col[j] = kk + 1;
    }
    d.factors = {std::move(lower), std::move(upper)};
  }
  return d;
}

PairNeuron EqualityDetector::below() const {
  PairNeuron n = sum;
  for (auto& w : n.w_row) w = -w;
  for (auto& w : n.w_col) w = -w;
  n.bias = -sum.bias + 1.0;
  return n;
}

PairNeuron EqualityDetector::above() const {
  PairNeuron n = sum;
  n.bias = sum.bias + 1.0;
  return n;
}

bool EqualityDetector::fires(std::size_t i, std::size_t j) const {
  return below().fires(i, j) && above().fires(i, j);
}

EqualityDetector detect_nondecreasing(const BinMatrix& m) {
  if (m.empty() || !is_nondecreasing(m)) {
    throw InvalidArgument("not a non-decreasing matrix:\n" + m.to_string());
  }
  // Image rows get labels 1, 2, ... in increasing order; a defined column
  // carries the label of its row. Anything undefined has weight 0, which
  // keeps s strictly negative there.
  const double D1 = static_cast<double>(std::max(m.rows(), m.cols())) + 1.0;
  EqualityDetector d;
  d.sum.w_row.assign(m.rows(), 0.0);
  d.sum.w_col.assign(m.cols(), 0.0);
  d.sum.bias = -D1;
  std::vector<double> label(m.rows(), 0.0);
  double next = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) {
        label[r] = ++next;
        break;
      }
    }
  }
  for (auto [r, c] : m.ones()) {
    d.sum.w_row[r] = D1 - label[r];
    d.sum.w_col[c] = label[r];
  }
  return d;
}

}  // namespace hfsa
