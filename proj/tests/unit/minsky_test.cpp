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

#include "hfsa/errors.hpp"
#include "hfsa/extract.hpp"
#include "hfsa/fixtures.hpp"
#include "hfsa/minsky.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace hfsa {
namespace {

// Reference matrices in signed form: +1 marks an edge and -1
// everything else, with no separate bias. Our form uses 0/1 with b = -1.
const double kPrintedU[6][6] = {
    {-1, -1, 1, 1, -1, -1}, {-1, -1, -1, -1, -1, -1}, {1, 1, -1, -1, -1, -1},
    {-1, -1, -1, -1, -1, -1}, {-1, -1, -1, -1, -1, -1}, {1, 1, 1, 1, 1, 1}};
const double kPrintedV[6][2] = {{1, -1}, {-1, -1}, {1, -1}, {-1, -1}, {-1, -1}, {-1, 1}};
const double kPrintedE[3][6] = {{0.1, 0.1, 0.5, 0.5, 0, 0},
                                {0.9, 0.9, 0.5, 0.5, 0.5, 0.5},
                                {0, 0, 0, 0, 0.5, 0.5}};

TEST(Minsky, WorkedExampleMatrices) {
  for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
    HrnnLm lm = build_minsky(minsky_example(), proj);
    ASSERT_EQ(lm.hidden_size(), 6u);
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) EXPECT_EQ(lm.U()(r, c), kPrintedU[r][c] > 0 ? 1.0 : 0.0);
      for (int c = 0; c < 2; ++c) EXPECT_EQ(lm.V()(r, c), kPrintedV[r][c] > 0 ? 1.0 : 0.0);
      EXPECT_EQ(lm.bias()[r], -1.0);
    }
    for (int k = 0; k < 3; ++k) {
      for (int c = 0; c < 6; ++c) {
        const ExtReal e = lm.E()(k, c);
        if (proj == Projection::kSoftmax) {
          EXPECT_EQ(e, ExtReal::log_of(kPrintedE[k][c]));
        } else {
          EXPECT_EQ(e.value(), kPrintedE[k][c]);
        }
      }
    }
  }
}

TEST(Minsky, PrintedSignedFormGivesSameFirstStep) {
  // U h0 + V onehot(b) with the signed matrices is (-2,-2,0,-2,-2,2).
  std::vector<double> pre(6);
  for (int r = 0; r < 6; ++r) pre[r] = kPrintedU[r][0] + kPrintedV[r][1];
  EXPECT_EQ(pre, (std::vector<double>{-2, -2, 0, -2, -2, 2}));
  HrnnLm lm = build_minsky(minsky_example(), Projection::kSoftmax);
  HiddenState h1 = step(lm, lm.h0(), 1);
  for (int r = 0; r < 6; ++r) EXPECT_EQ(h1[r], pre[r] > 0 ? 1 : 0);
}

TEST(Minsky, SingleStateAutomaton) {
  Wfsa a(Alphabet({"a", "b"}), 1, {}, {1.0}, {1.0});
  for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
    HrnnLm lm = build_minsky(a, proj);
    EXPECT_EQ(lm.hidden_size(), 2u);
    EXPECT_EQ(score_string(lm, ""), 1.0);
    EXPECT_EQ(score_string(lm, "a"), 0.0);
  }
}

TEST(Minsky, Preconditions) {
  EXPECT_THROW(build_minsky(nondet_pfsa(), Projection::kSoftmax), PreconditionError);
  Wfsa bad(Alphabet({"a"}), 1, {{0, 0, 0.5, 0}}, {1.0}, {0.4});
  EXPECT_THROW(build_minsky(bad, Projection::kSparsemax), PreconditionError);
}

TEST(Minsky, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto shape = testing::random_shape(seed);
    Wfsa a = gen_random_dpfsa(seed, shape.states, shape.symbols);
    HrnnLm lm = build_minsky(a, Projection::kSparsemax);
    const std::size_t S = shape.symbols, D = lm.hidden_size();
    EXPECT_EQ(D, shape.states * S);
    for (double x : lm.U().data()) EXPECT_TRUE(x == 0.0 || x == 1.0);
    for (double x : lm.V().data()) EXPECT_TRUE(x == 0.0 || x == 1.0);
    for (double x : lm.bias()) EXPECT_EQ(x, -1.0);
    // Columns n(q, y) and n(q, y') of U agree: the incoming symbol does not
    // affect where q goes next.
    for (std::size_t q = 0; q < shape.states; ++q) {
      for (std::size_t y = 1; y < S; ++y) {
        for (std::size_t r = 0; r < D; ++r) {
          EXPECT_EQ(lm.U()(r, q * S), lm.U()(r, q * S + y));
        }
      }
    }
  }
}

TEST(Minsky, TracksAutomatonState) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto shape = testing::random_shape(seed);
    Wfsa a = gen_random_dpfsa(seed, shape.states, shape.symbols);
    HrnnLm lm = build_minsky(a, Projection::kSoftmax);
    SplitMix64 rng(seed);
    for (int t = 0; t < 50; ++t) {
      auto y = testing::random_string(rng, shape.symbols, 8);
      HiddenState h = lm.h0();
      for (std::size_t i = 0; i < y.size(); ++i) {
        h = step(lm, h, y[i]);
        std::vector<SymbolId> prefix(y.begin(), y.begin() + i + 1);
        EXPECT_EQ(minsky_decode(h, shape.symbols), oracle::direct_run(a, prefix));
        EXPECT_TRUE(h[minsky_index(oracle::direct_run(a, prefix), y[i], shape.symbols)]);
      }
    }
  }
}

TEST(Minsky, WeakEquivalenceOnFixtures) {
  for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
    for (const Wfsa& a : {example_fslm(), minsky_example()}) {
      HrnnLm lm = build_minsky(a, proj);
      for (const auto& y : testing::all_strings(a.num_symbols(), 8)) {
        EXPECT_NEAR(score_string(lm, y), oracle::path_enumeration_stringsum(a, y), 1e-9);
      }
    }
  }
}

TEST(Minsky, IncompleteAutomatonDiesOffSupport) {
  Wfsa a = gen_a_n(4);
  HrnnLm lm = build_minsky(a, Projection::kSoftmax);
  for (const auto& y : testing::all_strings(4, 4)) {
    EXPECT_NEAR(score_string(lm, y), stringsum(a, y), 1e-12);
  }
}

TEST(AndNeuron, TwoInputs) {
  std::vector<std::size_t> idx{0, 1};
  auto [w, b] = and_neuron(idx, 2);
  EXPECT_EQ(b, -1.0);
  EXPECT_GT(w[0] + w[1] + b, 0.0);
  EXPECT_FALSE(w[0] + b > 0.0);
}

TEST(AndNeuron, ExhaustiveTruthTable) {
  std::vector<std::size_t> idx{0, 2, 4};
  auto [w, b] = and_neuron(idx, 5);
  for (unsigned x = 0; x < 32; ++x) {
    double s = b;
    for (int i = 0; i < 5; ++i) s += w[i] * ((x >> i) & 1);
    const bool want = (x & 1) && (x & 4) && (x & 16);
    EXPECT_EQ(s > 0.0, want) << x;
  }
  EXPECT_THROW(and_neuron(std::vector<std::size_t>{}, 3), InvalidArgument);
  EXPECT_THROW(and_neuron(std::vector<std::size_t>{3}, 3), InvalidArgument);
}

TEST(Extract, RoundTripOnFixture) {
  for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
    Wfsa a = example_fslm();
    Wfsa b = extract_dpfsa(build_minsky(a, proj));
    EXPECT_TRUE(is_deterministic(b));
    EXPECT_TRUE(is_probabilistic(b, 1e-9));
    EXPECT_LE(b.num_states(), a.num_states() * a.num_symbols());
    for (const auto& y : testing::all_strings(2, 8)) {
      EXPECT_NEAR(stringsum(b, y), stringsum(a, y), 1e-9);
    }
  }
}

TEST(Extract, ConstantRecurrence) {
  Matrix<ExtReal> E(3, 1, {ExtReal(0.0), ExtReal(1.0), ExtReal(0.5)});
  HrnnLm lm(Alphabet({"a", "b"}), Matrix<double>(1, 1, 0.0), Matrix<double>(1, 2, 0.0), {0.0},
            {0}, E, Projection::kSoftmax);
  std::vector<HiddenState> hidden;
  Wfsa b = extract_dpfsa(lm, 10, &hidden);
  ASSERT_EQ(b.num_states(), 1u);
  EXPECT_EQ(hidden, std::vector<HiddenState>{HiddenState{0}});
  auto p = next_dist(lm, {0});
  ASSERT_EQ(b.transitions().size(), 2u);
  for (const auto& t : b.transitions()) {
    EXPECT_EQ(t.dst, 0u);
    EXPECT_EQ(t.weight, p[t.sym]);
  }
  EXPECT_EQ(b.final_weight(0), p[2]);
  EXPECT_EQ(b.initial(0), 1.0);
}

TEST(Extract, StateBoundAndRoundTripOnRandomAutomata) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto shape = testing::random_shape(seed);
    Wfsa a = gen_random_dpfsa(seed, shape.states, shape.symbols);
    HrnnLm lm = build_minsky(a, Projection::kSparsemax);
    Wfsa b = extract_dpfsa(lm);
    EXPECT_LE(b.num_states(), shape.states * shape.symbols);
    for (const auto& y : testing::all_strings(shape.symbols, 5)) {
      EXPECT_NEAR(stringsum(b, y), score_string(lm, y), 1e-9);
    }
  }
}

TEST(Extract, BudgetExceeded) {
  // A 3-bit counter visits all 8 hidden vectors.
  const std::size_t D = 3;
  Matrix<double> U(D, D, 0.0);
  // bit0' = not bit0; bit1' = bit1 xor bit0 is not linear, so use a shift
  // register instead: bit0' = not bit2, bit1' = bit0, bit2' = bit1.
  U(0, 2) = -1;
  U(1, 0) = 1;
  U(2, 1) = 1;
  HrnnLm lm(Alphabet({"a"}), U, Matrix<double>(D, 1, 0.0), {0.5, -0.5, -0.5}, {0, 0, 0},
            Matrix<ExtReal>(2, D, ExtReal(0.0)), Projection::kSoftmax);
  EXPECT_EQ(extract_dpfsa(lm).num_states(), 6u);
  EXPECT_THROW(extract_dpfsa(lm, 5), BudgetExceeded);
  EXPECT_NO_THROW(extract_dpfsa(lm, 6));
}

TEST(Extract, PropagatesDegenerateDistribution) {
  HrnnLm lm(Alphabet({"a"}), Matrix<double>(1, 1, 0.0), Matrix<double>(1, 1, 0.0), {0.0}, {1},
            Matrix<ExtReal>(2, 1, ExtReal::neg_inf()), Projection::kSoftmax);
  EXPECT_THROW(extract_dpfsa(lm), DegenerateDistribution);
}

}  // namespace
}  // namespace hfsa
