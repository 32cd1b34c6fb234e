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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hfsa/compress.hpp"
#include "hfsa/extract.hpp"
#include "hfsa/fixtures.hpp"
#include "hfsa/hrnn.hpp"
#include "hfsa/minsky.hpp"
#include "hfsa/separate.hpp"
#include "hfsa/verify.hpp"
#include "hfsa/wfsa.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace hfsa {
namespace {

using testing::all_strings;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed; first: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// The 100 random DPFSAs shared by criteria 3 and 4.
std::vector<Wfsa> random_dpfsas() {
  std::vector<Wfsa> out;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto shape = testing::random_shape(seed);
    out.push_back(gen_random_dpfsa(seed, shape.states, shape.symbols));
  }
  return out;
}

// The 20 random complete DFAs shared by criteria 6 to 9.
std::vector<Wfsa> random_dfas() {
  std::vector<Wfsa> out;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SplitMix64 rng(seed + 4242);
    out.push_back(gen_random_dfa(seed, 1 + rng.below(16), 1 + rng.below(3)));
  }
  return out;
}

Outcome worked_example() {
  Tally t;
  const std::vector<SymbolId> b{1};
  for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
    const double p = score_string(build_minsky(minsky_example(), proj), b);
    t.expect(std::abs(p - 0.45) <= 1e-12,
             std::string(projection_name(proj)) + " gives " + fmt(p));
  }
  return t.outcome("p(b) = 0.45 under both projections");
}

Outcome closed_form() {
  Tally t;
  const Wfsa a = example_fslm();
  const HrnnLm soft = build_minsky(a, Projection::kSoftmax);
  const HrnnLm sparse = build_minsky(a, Projection::kSparsemax);
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      std::vector<SymbolId> y{0};
      y.insert(y.end(), n, 1);
      y.push_back(0);
      y.insert(y.end(), m, 1);
      const double expect = 0.6 * std::pow(0.1, n) * 0.9 * std::pow(0.7, m) * 0.3;
      for (double got : {stringsum(a, y), score_string(soft, y), score_string(sparse, y)}) {
        worst = std::max(worst, std::abs(got - expect));
        t.expect(std::abs(got - expect) <= 1e-12, "n=" + std::to_string(n) + " m=" +
                                                      std::to_string(m));
      }
    }
  }
  return t.outcome("max error " + fmt(worst));
}

Outcome weak_equivalence(const std::vector<Wfsa>& models) {
  Tally t;
  double worst = 0.0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
      EquivReport r = brute_equiv(WfsaScorer(models[i]),
                                  HrnnScorer(build_minsky(models[i], proj)), 8, 1e-9);
      worst = std::max(worst, r.max_abs_diff);
      t.expect(r.pass, "automaton " + std::to_string(i) + " " +
                           std::string(projection_name(proj)));
    }
  }
  return t.outcome(std::to_string(models.size()) + " automata, max diff " + fmt(worst));
}

Outcome round_trip(const std::vector<Wfsa>& models) {
  Tally t;
  double worst = 0.0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (auto proj : {Projection::kSoftmax, Projection::kSparsemax}) {
      const std::string id =
          "automaton " + std::to_string(i) + " " + std::string(projection_name(proj));
      Wfsa back = extract_dpfsa(build_minsky(models[i], proj));
      EquivReport r = brute_equiv(WfsaScorer(models[i]), WfsaScorer(back), 8, 1e-9);
      worst = std::max(worst, r.max_abs_diff);
      t.expect(r.pass, id);
      t.expect(back.num_states() <= models[i].num_states() * models[i].num_symbols(),
               "state bound, " + id);
    }
  }
  return t.outcome("max diff " + fmt(worst));
}

Outcome nondeterministic_fixture() {
  Tally t;
  const Wfsa a = nondet_pfsa();
  t.expect(!is_deterministic(a), "is_deterministic returned true");
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    std::vector<SymbolId> y{0};
    y.insert(y.end(), n, 1);
    y.push_back(2);
    const double expect = 0.5 * std::pow(0.9, n) * 0.1 + 0.5 * std::pow(0.1, n) * 0.9;
    const double got = stringsum(a, y);
    worst = std::max(worst, std::abs(got - expect));
    t.expect(std::abs(got - expect) <= 1e-12, "n=" + std::to_string(n));
  }
  return t.outcome("max error " + fmt(worst));
}

struct Builds {
  std::vector<DewdneyBuild> dewdney;
  std::vector<IndykBuild> indyk;
};

Outcome compressed_trajectories(const std::vector<Wfsa>& dfas, Builds& builds) {
  Tally t;
  std::size_t strings = 0;
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    const Wfsa& a = dfas[i];
    builds.dewdney.push_back(build_dewdney(a));
    builds.indyk.push_back(build_indyk(a, i));
    for (const auto& y : all_strings(a.num_symbols(), 6)) {
      const auto expect = oracle::direct_trajectory(a, y);
      ++strings;
      t.expect(simulate_net(builds.dewdney.back().net, y) == expect,
               "dewdney, automaton " + std::to_string(i) + " on " + a.alphabet().format(y));
      t.expect(simulate_net(builds.indyk.back().net, y) == expect,
               "indyk, automaton " + std::to_string(i) + " on " + a.alphabet().format(y));
    }
  }
  return t.outcome(std::to_string(dfas.size()) + " automata, " + std::to_string(strings) +
                   " strings");
}

Outcome cover_bounds(const Builds& builds) {
  Tally t;
  std::size_t covers = 0;
  for (const auto& b : builds.dewdney) {
    for (const auto& p : b.parts) {
      ++covers;
      t.expect(p.cover.size() <= line_cover_bound(p.matrix.popcount()), "line cover too large");
      t.expect(or_all(p.cover, p.matrix) == p.matrix, "line cover OR differs");
    }
  }
  for (const auto& b : builds.indyk) {
    for (const auto& p : b.parts) {
      ++covers;
      t.expect(or_all(p.cover, p.matrix) == p.matrix, "non-decreasing cover OR differs");
    }
  }
  return t.outcome(std::to_string(covers) + " covers");
}

Outcome detector_exactness(const Builds& builds) {
  Tally t;
  std::size_t detectors = 0, mismatches = 0;
  auto check = [&](const auto& parts) {
    for (const auto& p : parts) {
      t.expect(p.detectors.size() == p.cover.size(), "detector count");
      for (std::size_t i = 0; i < p.cover.size() && i < p.detectors.size(); ++i) {
        ++detectors;
        const std::size_t bad = count_mismatches(p.detectors[i], p.cover[i]);
        mismatches += bad;
        t.expect(bad == 0, "detector mismatch");
      }
    }
  };
  for (const auto& b : builds.dewdney) check(b.parts);
  for (const auto& b : builds.indyk) check(b.parts);
  return t.outcome(std::to_string(detectors) + " detectors, " + std::to_string(mismatches) +
                   " mismatches");
}

Outcome separation(const std::vector<Wfsa>& dfas) {
  Tally t;
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    const Wfsa& a = dfas[i];
    const Wfsa b = separate(a).fsa;
    const std::string id = "automaton " + std::to_string(i);
    t.expect(is_log_separable(b), id + " not log-separable");
    t.expect(b.num_states() <= a.num_states() * a.num_symbols() + 1, id + " too many states");
    for (const auto& y : all_strings(a.num_symbols(), 8)) {
      t.expect(accepts(a, y) == accepts(b, y), id + " differs on " + a.alphabet().format(y));
    }
  }
  return t.outcome(std::to_string(dfas.size()) + " automata");
}

Outcome sparsemax_check() {
  Tally t;
  SplitMix64 rng(2026);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 2 + i % 2;
    std::vector<double> x(d);
    for (auto& v : x) v = 4.0 * rng.uniform() - 2.0;
    const auto got = sparsemax(x);
    const auto ref = oracle::grid_simplex_projection(x);
    for (std::size_t k = 0; k < d; ++k) {
      worst = std::max(worst, std::abs(got[k] - ref[k]));
      t.expect(std::abs(got[k] - ref[k]) <= 1e-6, "input " + std::to_string(i));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 2 + rng.below(5);
    std::vector<double> p(d);
    double total = 0.0;
    for (auto& v : p) total += v = rng.uniform();
    for (auto& v : p) v /= total;
    t.expect(sparsemax(p) == p, "simplex point " + std::to_string(i) + " moved");
  }
  return t.outcome("max oracle gap " + fmt(worst));
}

Outcome normalization() {
  Tally t;
  double top = 0.0;
  for (const auto& f : fixtures()) {
    if (!is_probabilistic(f.fsa)) continue;
    MassReport r = mass_report(WfsaScorer(f.fsa), 12);
    for (std::size_t k = 0; k < r.cumulative.size(); ++k) {
      top = std::max(top, r.cumulative[k]);
      t.expect(r.cumulative[k] <= 1.0 + 1e-9, f.name + " at length " + std::to_string(k));
    }
  }
  return t.outcome("largest cumulative mass " + fmt(top));
}

int run_all() {
  int failed = 0;
  auto report = [&](int id, const char* name, double budget_s, const std::function<Outcome()>& f) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
      o.pass = false;
      o.detail += ", over the " + fmt(budget_s) + " s budget";
    }
    failed += !o.pass;
    std::printf("%s  %2d  %-32s %.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  };

  const std::vector<Wfsa> dpfsas = random_dpfsas();
  const std::vector<Wfsa> dfas = random_dfas();
  Builds builds;

  report(1, "worked example", 1, worked_example);
  report(2, "closed-form family", 1, closed_form);
  report(3, "weak equivalence", 120, [&] { return weak_equivalence(dpfsas); });
  report(4, "extraction round trip", 120, [&] { return round_trip(dpfsas); });
  report(5, "non-determinizable fixture", 0, nondeterministic_fixture);
  report(6, "compressed trajectories", 180,
         [&] { return compressed_trajectories(dfas, builds); });
  report(7, "cover size and soundness", 0, [&] { return cover_bounds(builds); });
  report(8, "detector exactness", 0, [&] { return detector_exactness(builds); });
  report(9, "separation", 0, [&] { return separation(dfas); });
  report(10, "sparsemax", 0, sparsemax_check);
  report(11, "normalization", 0, normalization);

  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace hfsa

int main() { return hfsa::run_all(); }
