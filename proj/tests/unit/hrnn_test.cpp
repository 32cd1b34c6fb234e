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

#include <gtest/gtest.h>

#include <numeric>

#include "hfsa/errors.hpp"
#include "hfsa/fixtures.hpp"
#include "hfsa/hrnn.hpp"
#include "hfsa/minsky.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace hfsa {
namespace {

HrnnLm constant_lm(std::size_t D, std::size_t S, Projection proj, HiddenState h0) {
  return HrnnLm(Alphabet(default_symbol_names(S)), Matrix<double>(D, D, 0.0),
                Matrix<double>(D, S, 0.0), std::vector<double>(D, 0.0), std::move(h0),
                Matrix<ExtReal>(S + 1, D, ExtReal(0.0)), proj);
}

HiddenState onehot(std::size_t D, std::size_t i) {
  HiddenState h(D, 0);
  h[i] = 1;
  return h;
}

TEST(Step, ZeroParametersGiveZeroState) {
  HrnnLm lm = constant_lm(3, 2, Projection::kSoftmax, {1, 1, 0});
  EXPECT_EQ(step(lm, {1, 1, 1}, 0), (HiddenState{0, 0, 0}));
  EXPECT_EQ(step(lm, {0, 0, 0}, 1), (HiddenState{0, 0, 0}));
}

TEST(Step, WorkedExampleTransition) {
  HrnnLm lm = build_minsky(minsky_example(), Projection::kSoftmax);
  // h0 = (q0, a); reading b lands in (q2, b).
  EXPECT_EQ(lm.h0(), onehot(6, 0));
  EXPECT_EQ(step(lm, lm.h0(), 1), onehot(6, 5));
}

TEST(Step, ConjunctionGadget) {
  // One unit reading two hidden bits with weight 1 and bias -1.
  Matrix<double> U(3, 3, 0.0);
  U(2, 0) = U(2, 1) = 1.0;
  HrnnLm lm(Alphabet({"a"}), U, Matrix<double>(3, 1, 0.0), {-1, -1, -1}, {0, 0, 0},
            Matrix<ExtReal>(2, 3, ExtReal(0.0)), Projection::kSoftmax);
  EXPECT_EQ(step(lm, {1, 1, 0}, 0)[2], 1);
  EXPECT_EQ(step(lm, {1, 0, 0}, 0)[2], 0);
  EXPECT_EQ(step(lm, {0, 1, 0}, 0)[2], 0);
}

TEST(Step, SnapsTinyPreactivationsToZero) {
  Matrix<double> V(1, 1, std::vector<double>{1e-10});
  HrnnLm lm(Alphabet({"a"}), Matrix<double>(1, 1, 0.0), V, {0.0}, {0},
            Matrix<ExtReal>(2, 1, ExtReal(0.0)), Projection::kSoftmax);
  EXPECT_EQ(step(lm, {0}, 0)[0], 0);
}

TEST(Step, ShapeAndSymbolErrors) {
  HrnnLm lm = constant_lm(3, 2, Projection::kSoftmax, {1, 0, 0});
  EXPECT_THROW(step(lm, {1, 0}, 0), ShapeError);
  EXPECT_THROW(step(lm, {1, 0, 0}, 2), UnknownSymbol);
  EXPECT_THROW(next_dist(lm, {1}), ShapeError);
}

TEST(Step, OutputsAreBinary) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t D = 5, S = 2;
    std::vector<double> u(D * D), v(D * S), b(D);
    for (auto& x : u) x = rng.uniform() * 4 - 2;
    for (auto& x : v) x = rng.uniform() * 4 - 2;
    for (auto& x : b) x = rng.uniform() * 4 - 2;
    HrnnLm lm(Alphabet({"a", "b"}), Matrix<double>(D, D, u), Matrix<double>(D, S, v), b,
              HiddenState(D, 1), Matrix<ExtReal>(S + 1, D, ExtReal(0.0)),
              Projection::kSparsemax);
    HiddenState h = lm.h0();
    for (int t = 0; t < 20; ++t) {
      h = step(lm, h, static_cast<SymbolId>(rng.below(S)));
      for (auto bit : h) EXPECT_TRUE(bit == 0 || bit == 1);
    }
  }
}

TEST(Softmax, Examples) {
  auto p = softmax_ext(std::vector<ExtReal>{ExtReal(0), ExtReal(0)});
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.5);
  p = softmax_ext(std::vector<ExtReal>{ExtReal::log_of(0.9), ExtReal::log_of(0.1),
                                       ExtReal::neg_inf()});
  EXPECT_NEAR(p[0], 0.9, 1e-15);
  EXPECT_NEAR(p[1], 0.1, 1e-15);
  EXPECT_EQ(p[2], 0.0);
  p = softmax_ext(std::vector<ExtReal>{ExtReal(1), ExtReal(0)});
  EXPECT_NEAR(p[0], std::exp(1.0) / (std::exp(1.0) + 1), 1e-15);
  EXPECT_NEAR(p[1], 1 / (std::exp(1.0) + 1), 1e-15);
}

TEST(Softmax, AllNegInfIsDegenerate) {
  EXPECT_THROW(softmax_ext(std::vector<ExtReal>{ExtReal::neg_inf(), ExtReal::neg_inf()}),
               DegenerateDistribution);
}

TEST(ExtRealTest, Arithmetic) {
  EXPECT_EQ(ExtReal::neg_inf().exp(), 0.0);
  EXPECT_TRUE((ExtReal::neg_inf() + ExtReal(3.0)).is_neg_inf());
  EXPECT_TRUE(ExtReal::log_of(0.0).is_neg_inf());
  EXPECT_THROW(ExtReal(std::numeric_limits<double>::infinity()), InvalidArgument);
  EXPECT_THROW(ExtReal(std::nan("")), InvalidArgument);
  EXPECT_THROW(ExtReal::log_of(-1.0), InvalidArgument);
}

TEST(Sparsemax, Examples) {
  EXPECT_EQ(sparsemax(std::vector<double>{0.3, 0.7}), (SimplexVec{0.3, 0.7}));
  EXPECT_EQ(sparsemax(std::vector<double>{1.5, 0.5}), (SimplexVec{1.0, 0.0}));
  EXPECT_EQ(sparsemax(std::vector<double>{2, 0, 0}), (SimplexVec{1.0, 0.0, 0.0}));
  auto p = sparsemax(std::vector<double>{0, 0, 0, 0});
  for (double x : p) EXPECT_DOUBLE_EQ(x, 0.25);
}

TEST(Sparsemax, TiesSplitEvenly) {
  auto p = sparsemax(std::vector<double>{1, 1, -5});
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.5);
  EXPECT_EQ(p[2], 0.0);
}

TEST(Sparsemax, MatchesGridOracle) {
  SplitMix64 rng(42);
  for (int t = 0; t < 40; ++t) {
    std::vector<double> x(2 + t % 2);
    for (auto& v : x) v = rng.uniform() * 4 - 2;
    auto p = sparsemax(x);
    auto q = oracle::grid_simplex_projection(x);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-6);
  }
}

TEST(Sparsemax, IdentityOnSimplex) {
  SplitMix64 rng(7);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> p(2 + t % 4);
    double z = 0;
    for (auto& v : p) z += (v = rng.uniform());
    for (auto& v : p) v /= z;
    // Renormalisation can leave the sum a few ulps off; fix the last entry.
    p.back() = 1.0 - std::accumulate(p.begin(), p.end() - 1, 0.0);
    auto q = sparsemax(p);
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(q[i], p[i], 1e-15);
  }
}

TEST(Sparsemax, OutputIsADistribution) {
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(1 + t % 7);
    for (auto& v : x) v = rng.uniform() * 10 - 5;
    auto p = sparsemax(x);
    double s = 0;
    for (double v : p) {
      EXPECT_GE(v, 0.0);
      s += v;
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(NextDist, WorkedExample) {
  for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
    HrnnLm lm = build_minsky(minsky_example(), proj);
    auto p = next_dist(lm, lm.h0());
    EXPECT_NEAR(p[0], 0.1, 1e-15);
    EXPECT_NEAR(p[1], 0.9, 1e-15);
    EXPECT_EQ(p[2], 0.0);
    p = next_dist(lm, onehot(6, 5));
    EXPECT_EQ(p[0], 0.0);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
    EXPECT_NEAR(p[2], 0.5, 1e-15);
  }
}

TEST(NextDist, ZeroOutputIsUniformUnderSparsemax) {
  HrnnLm lm = constant_lm(2, 3, Projection::kSparsemax, {1, 0});
  for (const HiddenState& h : {HiddenState{0, 0}, HiddenState{1, 1}}) {
    for (double x : next_dist(lm, h)) EXPECT_DOUBLE_EQ(x, 0.25);
  }
}

TEST(ScoreString, WorkedExampleAndEmptyString) {
  HrnnLm lm = build_minsky(minsky_example(), Projection::kSoftmax);
  EXPECT_NEAR(score_string(lm, "b"), 0.45, 1e-15);
  EXPECT_EQ(score_string(lm, ""), next_dist(lm, lm.h0())[2]);
  EXPECT_THROW(score_string(lm, "c"), UnknownSymbol);
  HrnnLm fslm = build_minsky(example_fslm(), Projection::kSparsemax);
  EXPECT_NEAR(score_string(fslm, "a a"), 0.162, 1e-15);
}

TEST(ScoreString, DeadStateScoresZero) {
  // b then a: q2 has no a-transition, so the hidden state dies.
  HrnnLm lm = build_minsky(example_fslm(), Projection::kSparsemax);
  EXPECT_EQ(score_string(lm, "b a"), 0.0);
  EXPECT_EQ(score_string(lm, "b a b b"), 0.0);
  HrnnLm zero = constant_lm(2, 2, Projection::kSparsemax, {0, 0});
  EXPECT_TRUE(is_dead_state(zero, {0, 0}) == false);
  EXPECT_NEAR(score_string(zero, "a b"), 1.0 / 27.0, 1e-15);
}

TEST(ScoreString, ConditionalsSumToOneAlongPrefixes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Wfsa a = gen_random_dpfsa(seed, 4, 3);
    HrnnLm lm = build_minsky(a, seed % 2 ? Projection::kSoftmax : Projection::kSparsemax);
    SplitMix64 rng(seed);
    HiddenState h = lm.h0();
    for (int t = 0; t < 10; ++t) {
      auto p = next_dist(lm, h);
      EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
      h = step(lm, h, static_cast<SymbolId>(rng.below(3)));
    }
  }
}

TEST(HrnnConstruction, Validation) {
  Alphabet ab({"a"});
  auto E = Matrix<ExtReal>(2, 2, ExtReal(0.0));
  EXPECT_THROW(HrnnLm(ab, Matrix<double>(2, 3, 0.0), Matrix<double>(2, 1, 0.0), {0, 0},
                      {0, 0}, E, Projection::kSoftmax),
               ShapeError);
  EXPECT_THROW(HrnnLm(ab, Matrix<double>(2, 2, 0.0), Matrix<double>(2, 2, 0.0), {0, 0},
                      {0, 0}, E, Projection::kSoftmax),
               ShapeError);
  EXPECT_THROW(HrnnLm(ab, Matrix<double>(2, 2, 0.0), Matrix<double>(2, 1, 0.0), {0, 0},
                      {0, 2}, E, Projection::kSoftmax),
               InvalidArgument);
  auto Einf = Matrix<ExtReal>(2, 2, ExtReal::neg_inf());
  EXPECT_THROW(HrnnLm(ab, Matrix<double>(2, 2, 0.0), Matrix<double>(2, 1, 0.0), {0, 0},
                      {0, 0}, Einf, Projection::kSparsemax),
               InvalidArgument);
  EXPECT_THROW(parse_projection("tanh"), InvalidArgument);
}

}  // namespace
}  // namespace hfsa
