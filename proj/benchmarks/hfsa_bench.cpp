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

#include <benchmark/benchmark.h>

#include <vector>

#include "hfsa/bin_matrix.hpp"
#include "hfsa/compress.hpp"
#include "hfsa/fixtures.hpp"
#include "hfsa/hrnn.hpp"
#include "hfsa/minsky.hpp"
#include "hfsa/verify.hpp"
#include "hfsa/wfsa.hpp"

namespace {

std::vector<hfsa::SymbolId> random_string(std::size_t len, std::size_t n_symbols) {
  hfsa::SplitMix64 rng(len);
  std::vector<hfsa::SymbolId> y(len);
  for (auto& s : y) s = static_cast<hfsa::SymbolId>(rng.below(n_symbols));
  return y;
}

void BM_Stringsum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  hfsa::Wfsa a = hfsa::gen_random_dpfsa(1, n, 4);
  auto y = random_string(64, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hfsa::stringsum(a, y));
}
BENCHMARK(BM_Stringsum)->Arg(4)->Arg(32)->Arg(256);

void BM_ScoreString(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  hfsa::HrnnLm lm =
      hfsa::build_minsky(hfsa::gen_random_dpfsa(2, n, 4), hfsa::Projection::kSoftmax);
  auto y = random_string(64, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hfsa::score_string(lm, y));
}
BENCHMARK(BM_ScoreString)->Arg(4)->Arg(32)->Arg(128);

void BM_LineCover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  hfsa::SplitMix64 rng(3);
  hfsa::BinMatrix m(n);
  for (std::size_t i = 0; i < n * n / 4; ++i) m.set(rng.below(n), rng.below(n));
  for (auto _ : state) benchmark::DoNotOptimize(hfsa::line_cover(m));
}
BENCHMARK(BM_LineCover)->Arg(8)->Arg(32)->Arg(128);

void BM_BuildDewdney(benchmark::State& state) {
  hfsa::Wfsa a = hfsa::gen_random_dfa(4, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hfsa::build_dewdney(a));
}
BENCHMARK(BM_BuildDewdney)->Arg(16)->Arg(256)->Arg(1024);

void BM_BuildIndyk(benchmark::State& state) {
  hfsa::Wfsa a = hfsa::gen_random_dfa(5, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hfsa::build_indyk(a, 0, 8));
}
BENCHMARK(BM_BuildIndyk)->Arg(16)->Arg(256)->Arg(1024);

void BM_BruteEquiv(benchmark::State& state) {
  hfsa::Wfsa a = hfsa::gen_random_dpfsa(6, 6, 3);
  hfsa::WfsaScorer s(a);
  hfsa::HrnnScorer h(hfsa::build_minsky(a, hfsa::Projection::kSparsemax));
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hfsa::brute_equiv(s, h, len, 1e-9));
}
BENCHMARK(BM_BruteEquiv)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
