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
// Heaviside Elman RNN language models.
//
// The recurrence is h' = H(U h + V r(y) + b) with the strict step function
// H(x) = 1{x > 0}; r(y) is the symbol embedding (one-hot unless overridden).
// The next-symbol distribution is the projection of E h onto the simplex over
// the alphabet plus EOS, with EOS in the last row of E.

#ifndef HFSA_HRNN_HPP_
#define HFSA_HRNN_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hfsa/alphabet.hpp"
#include "hfsa/matrix.hpp"

namespace hfsa {

// Pre-activations within this distance of zero are snapped to zero before
// thresholding.
inline constexpr double kHeavisideSnap = 1e-9;

// A real number or -inf. +inf and NaN are rejected on construction.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  explicit ExtReal(double v);

  static constexpr ExtReal neg_inf() {
    ExtReal x;
    x.v_ = -std::numeric_limits<double>::infinity();
    return x;
  }
  // log with log(0) = -inf. Throws InvalidArgument for negative p.
  static ExtReal log_of(double p);

  bool is_neg_inf() const { return std::isinf(v_); }
  double value() const { return v_; }
  double exp() const { return is_neg_inf() ? 0.0 : std::exp(v_); }

  friend ExtReal operator+(ExtReal a, ExtReal b) {
    ExtReal r;
    r.v_ = a.v_ + b.v_;  // -inf + finite = -inf; +inf never occurs
    return r;
  }
  bool operator==(const ExtReal&) const = default;

 private:
  double v_ = 0.0;
};

enum class Projection { kSoftmax, kSparsemax };

std::string_view projection_name(Projection p);
// "softmax" or "sparsemax"; throws InvalidArgument otherwise.
Projection parse_projection(std::string_view name);

using HiddenState = std::vector<std::uint8_t>;
// Probabilities indexed by symbol id, with EOS at index |alphabet|.
using SimplexVec = std::vector<double>;

class HrnnLm {
 public:
  // Shapes: U is D x D, V is D x R, b has D entries, h0 is a 0/1 vector of
  // length D, E is (|alphabet| + 1) x D. `embed`, when given, is R x
  // |alphabet| with 0/1 entries (column y embeds symbol y); otherwise R must
  // equal |alphabet| and the embedding is one-hot. Sparsemax models need a
  // finite E. Throws ShapeError / InvalidArgument.
  HrnnLm(Alphabet alphabet, Matrix<double> U, Matrix<double> V,
         std::vector<double> b, HiddenState h0, Matrix<ExtReal> E,
         Projection projection, std::optional<Matrix<double>> embed = {});

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t hidden_size() const { return b_.size(); }
  std::size_t input_size() const { return V_.cols(); }
  const Matrix<double>& U() const { return U_; }
  const Matrix<double>& V() const { return V_; }
  const std::vector<double>& bias() const { return b_; }
  const HiddenState& h0() const { return h0_; }
  const Matrix<ExtReal>& E() const { return E_; }
  Projection projection() const { return projection_; }
  const std::optional<Matrix<double>>& embed() const { return embed_; }

  // V r(y) + b, precomputed per symbol.
  const std::vector<double>& input_drive(SymbolId y) const;
  // Non-zero entries of column d of U as (row, value).
  const std::vector<std::pair<std::uint32_t, double>>& u_column(
      std::size_t d) const {
    return u_cols_[d];
  }

  bool operator==(const HrnnLm& other) const;

 private:
  Alphabet alphabet_;
  Matrix<double> U_, V_;
  std::vector<double> b_;
  HiddenState h0_;
  Matrix<ExtReal> E_;
  Projection projection_;
  std::optional<Matrix<double>> embed_;

  std::vector<std::vector<std::pair<std::uint32_t, double>>> u_cols_;
  std::vector<std::vector<double>> drive_;
};

// One recurrence step. Throws ShapeError when |h| != D and UnknownSymbol for
// an out-of-range y.
HiddenState step(const HrnnLm& lm, const HiddenState& h, SymbolId y);

// exp-normalization over extended reals; -inf maps to exactly 0. Throws
// DegenerateDistribution when every entry is -inf.
SimplexVec softmax_ext(std::span<const ExtReal> x);

// Euclidean projection onto the probability simplex (sort and threshold,
// ties broken by index). Inputs already on the simplex are returned as is.
SimplexVec sparsemax(std::span<const double> x);

// Projection of E h under the model's selector.
SimplexVec next_dist(const HrnnLm& lm, const HiddenState& h);

// The all-zero hidden vector (other than h0 itself) is a dead end: strings
// that reach it have probability 0.
bool is_dead_state(const HrnnLm& lm, const HiddenState& h);

// prod_t p(y_t | h_{t-1}) * p(EOS | h_T).
double score_string(const HrnnLm& lm, std::span<const SymbolId> y);
double score_string(const HrnnLm& lm, std::string_view y);

}  // namespace hfsa

#endif  // HFSA_HRNN_HPP_
