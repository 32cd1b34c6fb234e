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

#include "hfsa/verify.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "hfsa/errors.hpp"

namespace hfsa {

namespace {

std::vector<SymbolId> symbol_map(const Alphabet& from, const Alphabet& to) {
  if (from.size() != to.size()) throw AlphabetMismatch("alphabets differ in size");
  std::vector<SymbolId> map(from.size());
  for (SymbolId y = 0; y < from.size(); ++y) {
    auto id = to.find(from.name(y));
    if (!id) throw AlphabetMismatch("symbol '" + from.name(y) + "' missing from one alphabet");
    map[y] = *id;
  }
  return map;
}

struct Partial {
  double max = 0.0;
  std::vector<SymbolId> worst;
  bool have_worst = false;
  std::uint64_t n = 0;
  bool pass = true;

  void see(std::span<const SymbolId> y, double pa, double pb, double tol) {
    ++n;
    double d = std::abs(pa - pb);
    if (std::isnan(d)) d = std::numeric_limits<double>::infinity();
    if (!(d <= tol)) pass = false;
    if (!have_worst || d > max) {
      max = d;
      worst.assign(y.begin(), y.end());
      have_worst = true;
    }
  }

  // Larger difference wins; ties go to the string earlier in
  // length-lexicographic order.
  void merge(const Partial& o) {
    n += o.n;
    pass = pass && o.pass;
    if (!o.have_worst) return;
    bool take = !have_worst || o.max > max ||
                (o.max == max && (o.worst.size() < worst.size() ||
                                  (o.worst.size() == worst.size() && o.worst < worst)));
    if (take) {
      max = o.max;
      worst = o.worst;
      have_worst = true;
    }
  }
};

}  // namespace

EquivReport brute_equiv(const Scorer& a, const Scorer& b, std::size_t max_len,
                        double tol, std::size_t workers) {
  const std::vector<SymbolId> map = symbol_map(a.alphabet(), b.alphabet());
  const std::size_t S = a.alphabet().size();

  auto run = [&](Partial& part, std::span<const SymbolId> y, std::vector<SymbolId>& yb) {
    yb.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) yb[i] = map[y[i]];
    part.see(y, a.score(y), b.score(yb), tol);
  };

  Partial total;
  std::vector<SymbolId> scratch;
  run(total, {}, scratch);

  // Job y covers every non-empty string starting with y.
  std::vector<Partial> jobs(max_len > 0 ? S : 0);
  auto do_job = [&](std::size_t first) {
    std::vector<SymbolId> yb, y;
    for (std::size_t len = 1; len <= max_len; ++len) {
      y.assign(len, 0);
      y[0] = static_cast<SymbolId>(first);
      for_each_string(S, len - 1, [&](std::span<const SymbolId> rest) {
        std::copy(rest.begin(), rest.end(), y.begin() + 1);
        run(jobs[first], y, yb);
      });
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, jobs.size()));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) do_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j; (j = next++) < jobs.size();) do_job(j);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& j : jobs) total.merge(j);

  EquivReport r;
  r.max_abs_diff = total.max;
  r.worst = total.worst;
  r.worst_string = a.alphabet().format(total.worst);
  r.n_checked = total.n;
  r.pass = total.pass;
  return r;
}

MassReport mass_report(const Scorer& s, std::size_t max_len) {
  MassReport r;
  double cum = 0.0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    double mass = 0.0;
    for_each_string(s.alphabet().size(), len,
                    [&](std::span<const SymbolId> y) { mass += s.score(y); });
    cum += mass;
    r.per_length.push_back(mass);
    r.cumulative.push_back(cum);
  }
  return r;
}

}  // namespace hfsa
