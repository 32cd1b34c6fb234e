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

#include "hfsa/bin_matrix.hpp"

#include <cmath>
#include <deque>

#include "hfsa/errors.hpp"

namespace hfsa {

BinMatrix::BinMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  bits_.assign(rows_ * cols_, 0);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix rows");
    std::size_t c = 0;
    for (int v : row) {
      if (v != 0 && v != 1) throw InvalidArgument("matrix entries must be 0/1");
      set(r, c++, v == 1);
    }
    ++r;
  }
}

void BinMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& bit = bits_[r * cols_ + c];
  if (bit != v) popcount_ += v ? 1 : -1;
  bit = v;
}

std::vector<std::pair<std::size_t, std::size_t>> BinMatrix::ones() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(popcount_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.emplace_back(r, c);
    }
  }
  return out;
}

BinMatrix& BinMatrix::operator|=(const BinMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("OR of different shapes");
  for (auto [r, c] : other.ones()) set(r, c);
  return *this;
}

BinMatrix& BinMatrix::subtract(const BinMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("difference of different shapes");
  for (auto [r, c] : other.ones()) set(r, c, false);
  return *this;
}

std::string BinMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

const char* line_kind_name(LineKind k) {
  switch (k) {
    case LineKind::kRow: return "row";
    case LineKind::kColumn: return "column";
    case LineKind::kTransversal: return "transversal";
  }
  return "?";
}

std::optional<LineKind> line_kind(const BinMatrix& m) {
  if (m.empty()) return std::nullopt;
  std::vector<std::size_t> row_count(m.rows()), col_count(m.cols());
  for (auto [r, c] : m.ones()) {
    ++row_count[r];
    ++col_count[c];
  }
  auto used = [](const std::vector<std::size_t>& v) {
    std::size_t n = 0, max = 0;
    for (auto x : v) {
      n += x > 0;
      max = std::max(max, x);
    }
    return std::pair{n, max};
  };
  auto [rows_used, row_max] = used(row_count);
  auto [cols_used, col_max] = used(col_count);
  if (rows_used == 1) return LineKind::kRow;
  if (cols_used == 1) return LineKind::kColumn;
  if (row_max == 1 && col_max == 1) return LineKind::kTransversal;
  return std::nullopt;
}

namespace {

// Maximum bipartite matching between rows and columns of B.
struct Matching {
  std::vector<std::size_t> col_of_row, row_of_col;  // npos when unmatched
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

Matching max_matching(const BinMatrix& b) {
  Matching m{std::vector<std::size_t>(b.rows(), Matching::npos),
             std::vector<std::size_t>(b.cols(), Matching::npos)};
  std::vector<std::uint8_t> seen;
  // Iterative Kuhn augmenting path search from `root`.
  auto augment = [&](std::size_t root) {
    seen.assign(b.cols(), 0);
    struct Frame {
      std::size_t row, next_col, via_col;
    };
    std::vector<Frame> stack{{root, 0, Matching::npos}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      bool pushed = false;
      while (f.next_col < b.cols()) {
        std::size_t c = f.next_col++;
        if (!b.get(f.row, c) || seen[c]) continue;
        seen[c] = 1;
        if (m.row_of_col[c] == Matching::npos) {
          // Flip the path recorded on the stack.
          std::size_t col = c;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            std::size_t prev = m.col_of_row[it->row];
            m.col_of_row[it->row] = col;
            m.row_of_col[col] = it->row;
            col = prev;
          }
          return true;
        }
        stack.push_back({m.row_of_col[c], 0, c});
        pushed = true;
        break;
      }
      if (!pushed) stack.pop_back();
    }
    return false;
  };
  for (std::size_t r = 0; r < b.rows(); ++r) augment(r);
  return m;
}

}  // namespace

BinMatrix max_transversal(const BinMatrix& b) {
  Matching m = max_matching(b);
  BinMatrix t(b.rows(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (m.col_of_row[r] != Matching::npos) t.set(r, m.col_of_row[r]);
  }
  return t;
}

std::size_t line_cover_bound(std::size_t popcount) {
  auto n = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(popcount))));
  while (n * n < popcount) ++n;
  while (n > 0 && (n - 1) * (n - 1) >= popcount) --n;
  return 2 * n;
}

std::vector<BinMatrix> line_cover(const BinMatrix& b) {
  std::vector<BinMatrix> cover;
  if (b.empty()) return cover;
  const std::size_t two_n = line_cover_bound(b.popcount());
  BinMatrix rest = b;
  for (std::size_t i = 1; !rest.empty(); ++i) {
    Matching m = max_matching(rest);
    std::size_t size = 0;
    for (auto c : m.col_of_row) size += c != Matching::npos;
    if (size + i > two_n) {
      BinMatrix t(rest.rows(), rest.cols());
      for (std::size_t r = 0; r < rest.rows(); ++r) {
        if (m.col_of_row[r] != Matching::npos) t.set(r, m.col_of_row[r]);
      }
      rest.subtract(t);
      cover.push_back(std::move(t));
      continue;
    }
    // Koenig: alternate from unmatched rows along non-matching edges to
    // columns and back along matching edges. Cover = unreached rows plus
    // reached columns.
    std::vector<std::uint8_t> row_seen(rest.rows()), col_seen(rest.cols());
    std::deque<std::size_t> queue;
    for (std::size_t r = 0; r < rest.rows(); ++r) {
      if (m.col_of_row[r] == Matching::npos) {
        row_seen[r] = 1;
        queue.push_back(r);
      }
    }
    while (!queue.empty()) {
      std::size_t r = queue.front();
      queue.pop_front();
      for (std::size_t c = 0; c < rest.cols(); ++c) {
        if (!rest.get(r, c) || col_seen[c]) continue;
        col_seen[c] = 1;
        std::size_t r2 = m.row_of_col[c];
        if (r2 != Matching::npos && !row_seen[r2]) {
          row_seen[r2] = 1;
          queue.push_back(r2);
        }
      }
    }
    for (std::size_t r = 0; r < rest.rows(); ++r) {
      if (row_seen[r]) continue;
      BinMatrix line(rest.rows(), rest.cols());
      for (std::size_t c = 0; c < rest.cols(); ++c) {
        if (rest.get(r, c)) line.set(r, c);
      }
      if (line.empty()) continue;
      rest.subtract(line);
      cover.push_back(std::move(line));
    }
    for (std::size_t c = 0; c < rest.cols(); ++c) {
      if (!col_seen[c]) continue;
      BinMatrix line(rest.rows(), rest.cols());
      for (std::size_t r = 0; r < rest.rows(); ++r) {
        if (rest.get(r, c)) line.set(r, c);
      }
      if (line.empty()) continue;
      rest.subtract(line);
      cover.push_back(std::move(line));
    }
    break;
  }
  return cover;
}

bool is_nondecreasing(const BinMatrix& m) {
  std::size_t last = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t found = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m.get(r, c)) continue;
      if (++found > 1 || r < last) return false;
      last = r;
    }
  }
  return true;
}

std::vector<BinMatrix> nondecreasing_cover(const BinMatrix& b) {
  std::vector<BinMatrix> layers;
  std::vector<std::size_t> last_row;
  std::vector<std::size_t> last_col;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      if (!b.get(r, c)) continue;
      std::size_t k = 0;
      while (k < layers.size() && (last_col[k] == c || last_row[k] > r)) ++k;
      if (k == layers.size()) {
        layers.emplace_back(b.rows(), b.cols());
        last_row.push_back(0);
        last_col.push_back(static_cast<std::size_t>(-1));
      }
      layers[k].set(r, c);
      last_row[k] = r;
      last_col[k] = c;
    }
  }
  return layers;
}

BinMatrix or_all(const std::vector<BinMatrix>& parts, const BinMatrix& like) {
  BinMatrix out(like.rows(), like.cols());
  for (const auto& p : parts) out |= p;
  return out;
}

}  // namespace hfsa
