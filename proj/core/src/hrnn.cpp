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

#include "hfsa/hrnn.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hfsa/errors.hpp"

namespace hfsa {

ExtReal::ExtReal(double v) : v_(v) {
  if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
    throw InvalidArgument("extended reals exclude NaN and +inf");
  }
}

ExtReal ExtReal::log_of(double p) {
  if (!(p >= 0.0)) throw InvalidArgument("log of a negative weight");
  return p == 0.0 ? neg_inf() : ExtReal(std::log(p));
}

std::string_view projection_name(Projection p) {
  return p == Projection::kSoftmax ? "softmax" : "sparsemax";
}

Projection parse_projection(std::string_view name) {
  if (name == "softmax") return Projection::kSoftmax;
  if (name == "sparsemax") return Projection::kSparsemax;
  throw InvalidArgument("unknown projection '" + std::string(name) + "'");
}

HrnnLm::HrnnLm(Alphabet alphabet, Matrix<double> U, Matrix<double> V,
               std::vector<double> b, HiddenState h0, Matrix<ExtReal> E,
               Projection projection, std::optional<Matrix<double>> embed)
    : alphabet_(std::move(alphabet)),
      U_(std::move(U)),
      V_(std::move(V)),
      b_(std::move(b)),
      h0_(std::move(h0)),
      E_(std::move(E)),
      projection_(projection),
      embed_(std::move(embed)) {
  const std::size_t D = b_.size();
  const std::size_t S = alphabet_.size();
  if (U_.rows() != D || U_.cols() != D) throw ShapeError("U must be D x D");
  if (V_.rows() != D) throw ShapeError("V must have D rows");
  if (h0_.size() != D) throw ShapeError("h0 must have D entries");
  if (E_.rows() != S + 1 || E_.cols() != D) {
    throw ShapeError("E must be (|alphabet| + 1) x D");
  }
  const std::size_t R = V_.cols();
  if (embed_) {
    if (embed_->rows() != R || embed_->cols() != S) {
      throw ShapeError("embedding must be R x |alphabet|");
    }
    for (double v : embed_->data()) {
      if (v != 0.0 && v != 1.0) throw InvalidArgument("embedding must be 0/1");
    }
  } else if (R != S) {
    throw ShapeError("one-hot embedding needs R = |alphabet|");
  }
  for (auto v : h0_) {
    if (v > 1) throw InvalidArgument("h0 must be 0/1");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(U_.data().begin(), U_.data().end(), finite) ||
      !std::all_of(V_.data().begin(), V_.data().end(), finite) ||
      !std::all_of(b_.begin(), b_.end(), finite)) {
    throw InvalidArgument("U, V and b must be finite");
  }
  if (projection_ == Projection::kSparsemax) {
    for (const auto& e : E_.data()) {
      if (e.is_neg_inf()) throw InvalidArgument("sparsemax needs a finite E");
    }
  }

  u_cols_.resize(D);
  for (std::size_t r = 0; r < D; ++r) {
    for (std::size_t c = 0; c < D; ++c) {
      if (U_(r, c) != 0.0) {
        u_cols_[c].emplace_back(static_cast<std::uint32_t>(r), U_(r, c));
      }
    }
  }
  drive_.assign(S, b_);
  for (SymbolId y = 0; y < S; ++y) {
    for (std::size_t r = 0; r < D; ++r) {
      for (std::size_t k = 0; k < R; ++k) {
        double e = embed_ ? (*embed_)(k, y) : (k == y ? 1.0 : 0.0);
        if (e != 0.0) drive_[y][r] += V_(r, k) * e;
      }
    }
  }
}

const std::vector<double>& HrnnLm::input_drive(SymbolId y) const {
  if (y >= drive_.size()) {
    throw UnknownSymbol("symbol id " + std::to_string(y) + " out of range");
  }
  return drive_[y];
}

bool HrnnLm::operator==(const HrnnLm& other) const {
  return alphabet_ == other.alphabet_ && U_ == other.U_ && V_ == other.V_ &&
         b_ == other.b_ && h0_ == other.h0_ && E_ == other.E_ &&
         projection_ == other.projection_ && embed_ == other.embed_;
}

HiddenState step(const HrnnLm& lm, const HiddenState& h, SymbolId y) {
  const std::size_t D = lm.hidden_size();
  if (h.size() != D) throw ShapeError("hidden state has the wrong size");
  std::vector<double> pre = lm.input_drive(y);
  for (std::size_t d = 0; d < D; ++d) {
    if (!h[d]) continue;
    for (auto [r, v] : lm.u_column(d)) pre[r] += v;
  }
  HiddenState out(D);
  for (std::size_t r = 0; r < D; ++r) {
    double x = pre[r];
    if (std::abs(x) <= kHeavisideSnap) x = 0.0;
    out[r] = x > 0.0 ? 1 : 0;
  }
  return out;
}

SimplexVec softmax_ext(std::span<const ExtReal> x) {
  double max = -std::numeric_limits<double>::infinity();
  for (const auto& v : x) {
    if (!v.is_neg_inf()) max = std::max(max, v.value());
  }
  if (std::isinf(max)) {
    throw DegenerateDistribution("softmax of an all -inf vector");
  }
  SimplexVec p(x.size());
  double z = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = x[i].is_neg_inf() ? 0.0 : std::exp(x[i].value() - max);
    z += p[i];
  }
  for (auto& v : p) v /= z;
  return p;
}

SimplexVec sparsemax(std::span<const double> x) {
  if (x.empty()) throw ShapeError("sparsemax of an empty vector");
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  if (std::all_of(x.begin(), x.end(), [](double v) { return v >= 0.0; }) &&
      std::abs(total - 1.0) <= 1e-12) {
    return SimplexVec(x.begin(), x.end());
  }
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  double cumsum = 0.0, support_sum = 0.0;
  std::size_t support = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double z = x[order[k]];
    cumsum += z;
    if (1.0 + static_cast<double>(k + 1) * z > cumsum) {
      support = k + 1;
      support_sum = cumsum;
    }
  }
  const double tau = (support_sum - 1.0) / static_cast<double>(support);
  SimplexVec p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = std::max(x[i] - tau, 0.0);
  return p;
}

SimplexVec next_dist(const HrnnLm& lm, const HiddenState& h) {
  const std::size_t D = lm.hidden_size();
  if (h.size() != D) throw ShapeError("hidden state has the wrong size");
  const auto& E = lm.E();
  if (lm.projection() == Projection::kSoftmax) {
    std::vector<ExtReal> logits(E.rows());
    for (std::size_t d = 0; d < D; ++d) {
      if (!h[d]) continue;
      for (std::size_t k = 0; k < E.rows(); ++k) logits[k] = logits[k] + E(k, d);
    }
    return softmax_ext(logits);
  }
  std::vector<double> scores(E.rows(), 0.0);
  for (std::size_t d = 0; d < D; ++d) {
    if (!h[d]) continue;
    for (std::size_t k = 0; k < E.rows(); ++k) scores[k] += E(k, d).value();
  }
  return sparsemax(scores);
}

bool is_dead_state(const HrnnLm& lm, const HiddenState& h) {
  return std::none_of(h.begin(), h.end(), [](auto v) { return v != 0; }) &&
         h != lm.h0();
}

double score_string(const HrnnLm& lm, std::span<const SymbolId> y) {
  HiddenState h = lm.h0();
  double p = 1.0;
  for (SymbolId s : y) {
    if (s >= lm.alphabet().size()) {
      throw UnknownSymbol("symbol id " + std::to_string(s) + " out of range");
    }
    p *= next_dist(lm, h)[s];
    if (p == 0.0) return 0.0;
    h = step(lm, h, s);
    if (is_dead_state(lm, h)) return 0.0;
  }
  return p * next_dist(lm, h)[lm.alphabet().eos()];
}

double score_string(const HrnnLm& lm, std::string_view y) {
  return score_string(lm, lm.alphabet().parse(y));
}

}  // namespace hfsa
