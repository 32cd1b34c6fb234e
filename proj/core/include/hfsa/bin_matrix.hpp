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

// Dense 0/1 matrices and the decompositions used by the compressed
// encodings: maximum transversals, line covers and non-decreasing covers.

#ifndef HFSA_BIN_MATRIX_HPP_
#define HFSA_BIN_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hfsa {

class BinMatrix {
 public:
  BinMatrix() = default;
  explicit BinMatrix(std::size_t n) : BinMatrix(n, n) {}
  BinMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}
  // Rows of 0/1 values; throws ShapeError for ragged input and
  // InvalidArgument for other values.
  BinMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v = true);
  std::size_t popcount() const { return popcount_; }
  bool empty() const { return popcount_ == 0; }

  // Coordinates of the ones in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> ones() const;
  BinMatrix& operator|=(const BinMatrix& other);
  // Clears every one of `other` from this matrix.
  BinMatrix& subtract(const BinMatrix& other);
  bool operator==(const BinMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
  }
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> bits_;
  std::size_t popcount_ = 0;
};

// Row matrix: all ones in one row (a single one counts as a row matrix).
// Column matrix: two or more ones, all in one column. Transversal: at most
// one one per row and per column.
enum class LineKind { kRow, kColumn, kTransversal };

const char* line_kind_name(LineKind k);
// nullopt for zero matrices and matrices that are not line matrices.
std::optional<LineKind> line_kind(const BinMatrix& m);

// A transversal of B of maximum cardinality (augmenting-path matching,
// rows in ascending order, candidate columns in ascending order).
BinMatrix max_transversal(const BinMatrix& b);

// Line matrices whose OR is B. Peels maximum transversals until the i-th one
// has at most 2N - i ones (N = ceil(sqrt(popcount))), then covers the rest by
// the rows and columns of a minimum vertex cover. At most 2N lines.
std::vector<BinMatrix> line_cover(const BinMatrix& b);
std::size_t line_cover_bound(std::size_t popcount);

// A matrix with at most one one per column whose row index does not decrease
// from left to right.
bool is_nondecreasing(const BinMatrix& m);

// Non-decreasing matrices whose OR is B: columns are scanned left to right,
// ones top to bottom, and each one joins the first layer that has nothing in
// its column and whose last row is not below it.
std::vector<BinMatrix> nondecreasing_cover(const BinMatrix& b);

// OR of all matrices in `parts` (shape taken from `like`).
BinMatrix or_all(const std::vector<BinMatrix>& parts, const BinMatrix& like);

}  // namespace hfsa

#endif  // HFSA_BIN_MATRIX_HPP_
