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

// hfsa: compile, compress, extract and check finite-state language models.
//
// Exit status: 0 ok, 1 check/equiv failed, 2 usage or parse error,
// 3 precondition or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <variant>

#include "hfsa/compress.hpp"
#include "hfsa/errors.hpp"
#include "hfsa/extract.hpp"
#include "hfsa/fixtures.hpp"
#include "hfsa/hrnn_io.hpp"
#include "hfsa/minsky.hpp"
#include "hfsa/net_io.hpp"
#include "hfsa/separate.hpp"
#include "hfsa/verify.hpp"
#include "hfsa/wfsa_io.hpp"

namespace {

using nlohmann::json;
using Model = std::variant<hfsa::Wfsa, hfsa::HrnnLm, hfsa::ThresholdNet>;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

// Thrown for input that is well-formed but outside a command's domain.
struct Refused : hfsa::Error {
  using hfsa::Error::Error;
};

std::string first_token(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hfsa::ParseError("cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    return tok;
  }
  return {};
}

Model load_model(const std::string& path) {
  const std::string head = first_token(path);
  if (head == hfsa::kHrnnMagic) return hfsa::load_hrnn(path);
  if (head == hfsa::kNetMagic) return hfsa::load_net(path);
  return hfsa::load_wfsa(path);
}

hfsa::Wfsa load_fsa(const std::string& path) {
  Model m = load_model(path);
  if (auto* a = std::get_if<hfsa::Wfsa>(&m)) return std::move(*a);
  throw hfsa::ParseError("'" + path + "' is not an automaton file");
}

std::unique_ptr<hfsa::Scorer> make_scorer(Model m) {
  return std::visit(
      [](auto&& x) -> std::unique_ptr<hfsa::Scorer> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, hfsa::Wfsa>) {
          return std::make_unique<hfsa::WfsaScorer>(std::move(x));
        } else if constexpr (std::is_same_v<T, hfsa::HrnnLm>) {
          return std::make_unique<hfsa::HrnnScorer>(std::move(x));
        } else {
          return std::make_unique<hfsa::NetAcceptorScorer>(std::move(x));
        }
      },
      std::move(m));
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string prob(double p) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

// key=value,key=value
std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--params", "expected key=value, got '" + item + "'");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

template <typename T>
T param(const std::map<std::string, std::string>& p, const std::string& key, T fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  std::istringstream in(it->second);
  T v{};
  if (!(in >> v) || !in.eof()) {
    throw CLI::ValidationError("--params", "bad value for '" + key + "'");
  }
  return v;
}

void write_fsa(const std::string& out, const hfsa::Wfsa& a) {
  if (out.empty() || out == "-") {
    hfsa::write_wfsa(std::cout, a);
  } else {
    hfsa::save_wfsa(out, a);
  }
}

json fsa_summary(const hfsa::Wfsa& a) {
  return {{"states", a.num_states()},
          {"symbols", a.num_symbols()},
          {"transitions", a.transitions().size()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-state language models and Heaviside RNNs"};
  app.require_subcommand(1);
  std::string in, out, a_path, b_path, projection = "softmax", method, text, family,
      params;
  std::size_t max_states = hfsa::kDefaultMaxStates, max_len = 8, tries = hfsa::kDefaultIndykTries,
              workers = 1;
  std::uint64_t seed = 0;
  double tol = 1e-9;

  auto* compile = app.add_subcommand("compile", "Minsky-compile a DPFSA into an HRNN LM");
  compile->add_option("--in", in, "automaton file")->required();
  compile->add_option("--projection", projection)
      ->check(CLI::IsMember({"softmax", "sparsemax"}));
  compile->add_option("--out", out, "network file")->required();

  auto* extract = app.add_subcommand("extract", "extract a DPFSA from an HRNN LM");
  extract->add_option("--in", in, "network file")->required();
  extract->add_option("--out", out, "automaton file (- for stdout)");
  extract->add_option("--max-states", max_states)->check(CLI::PositiveNumber);

  auto* compress = app.add_subcommand("compress", "encode a DFA as a threshold network");
  compress->add_option("--in", in, "automaton file")->required();
  compress->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"minsky", "dewdney", "indyk"}));
  compress->add_option("--seed", seed, "permutation seed (indyk)");
  compress->add_option("--tries", tries, "permutation tries (indyk)")->check(CLI::PositiveNumber);
  compress->add_option("--out", out, "network file")->required();

  auto* sep = app.add_subcommand("separate", "make an unweighted DFA log|alphabet|-separable");
  sep->add_option("--in", in, "automaton file")->required();
  sep->add_option("--out", out, "automaton file (- for stdout)");

  auto* score = app.add_subcommand("score", "probability (or acceptance) of one string");
  score->add_option("--in", in, "automaton, HRNN or threshold-network file")->required();
  score->add_option("--string", text, "whitespace-separated symbols");

  auto* equiv = app.add_subcommand("equiv", "brute-force weak-equivalence check");
  equiv->add_option("--a", a_path)->required();
  equiv->add_option("--b", b_path)->required();
  equiv->add_option("--max-len", max_len);
  equiv->add_option("--tol", tol)->check(CLI::NonNegativeNumber);
  equiv->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* mass = app.add_subcommand("mass", "probability mass per string length");
  mass->add_option("--in", in)->required();
  mass->add_option("--max-len", max_len);

  auto* gen = app.add_subcommand("gen", "generate an automaton");
  gen->add_option("--family", family)->required()->check(CLI::IsMember({"a_n", "random", "dfa"}));
  gen->add_option("--params", params,
                  "a_n: n=N; random: seed,states,symbols; dfa: seed,states,symbols,final_prob");
  gen->add_option("--out", out, "automaton file (- for stdout)");

  auto* check = app.add_subcommand("check", "structural predicates of an automaton");
  check->add_option("--in", in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*compile) {
      auto lm = hfsa::build_minsky(load_fsa(in), hfsa::parse_projection(projection));
      hfsa::save_hrnn(out, lm);
      emit({{"hidden_size", lm.hidden_size()}, {"projection", projection}});
    } else if (*extract) {
      auto a = hfsa::extract_dpfsa(hfsa::load_hrnn(in), max_states);
      write_fsa(out, a);
      if (!out.empty() && out != "-") emit(fsa_summary(a));
    } else if (*compress) {
      hfsa::Wfsa a = load_fsa(in);
      json report{{"method", method}};
      hfsa::ThresholdNet net;
      if (method == "minsky") {
        net = hfsa::build_minsky_net(a);
      } else if (method == "dewdney") {
        auto b = hfsa::build_dewdney(a);
        std::size_t lines = 0;
        bool within = true;
        for (const auto& p : b.parts) {
          lines += p.cover.size();
          within = within && p.cover.size() <= hfsa::line_cover_bound(p.matrix.popcount());
        }
        report["s"] = b.code.s;
        report["line_matrices"] = lines;
        report["covers_within_bound"] = within;
        net = std::move(b.net);
      } else {
        auto b = hfsa::build_indyk(a, seed, tries);
        std::size_t layers = 0;
        for (const auto& p : b.parts) layers += p.cover.size();
        report["r"] = b.code.r;
        report["nondecreasing_matrices"] = layers;
        report["best_try"] = b.best_try;
        report["tries"] = b.try_units.size();
        report["permutation"] = b.code.permutation;
        net = std::move(b.net);
      }
      hfsa::save_net(out, net);
      auto size = net.size();
      report["data_cells"] = size.data_cells;
      report["processing_cells"] = size.processing_cells;
      report["sublayers"] = size.sublayers;
      report["total_units"] = size.total_units();
      emit(report);
    } else if (*sep) {
      hfsa::Wfsa a = load_fsa(in);
      if (!hfsa::is_unweighted(a)) throw Refused("separation applies to unweighted automata only");
      auto r = hfsa::separate(a);
      write_fsa(out, r.fsa);
      if (!out.empty() && out != "-") {
        json j = fsa_summary(r.fsa);
        j["log_separable"] = hfsa::is_log_separable(r.fsa);
        emit(j);
      }
    } else if (*score) {
      auto s = make_scorer(load_model(in));
      std::cout << prob(s->score(s->alphabet().parse(text))) << '\n';
    } else if (*equiv) {
      auto sa = make_scorer(load_model(a_path));
      auto sb = make_scorer(load_model(b_path));
      auto r = hfsa::brute_equiv(*sa, *sb, max_len, tol, workers);
      emit({{"pass", r.pass},
            {"max_abs_diff", r.max_abs_diff},
            {"worst_string", r.worst_string},
            {"n_checked", r.n_checked},
            {"max_len", max_len},
            {"tol", tol}});
      return r.pass ? kOk : kFailed;
    } else if (*mass) {
      auto s = make_scorer(load_model(in));
      auto r = hfsa::mass_report(*s, max_len);
      emit({{"per_length", r.per_length}, {"cumulative", r.cumulative}});
    } else if (*gen) {
      auto p = parse_params(params);
      hfsa::Wfsa a;
      if (family == "a_n") {
        a = hfsa::gen_a_n(param<std::size_t>(p, "n", 3));
      } else if (family == "random") {
        a = hfsa::gen_random_dpfsa(param<std::uint64_t>(p, "seed", 0),
                                   param<std::size_t>(p, "states", 4),
                                   param<std::size_t>(p, "symbols", 2));
      } else {
        a = hfsa::gen_random_dfa(param<std::uint64_t>(p, "seed", 0),
                                 param<std::size_t>(p, "states", 4),
                                 param<std::size_t>(p, "symbols", 2),
                                 param<double>(p, "final_prob", 0.5));
      }
      write_fsa(out, a);
    } else if (*check) {
      hfsa::Wfsa a = load_fsa(in);
      const bool det = hfsa::is_deterministic(a);
      const bool probabilistic = hfsa::is_probabilistic(a);
      emit({{"deterministic", det},
            {"probabilistic", probabilistic},
            {"log_separable", hfsa::is_log_separable(a)},
            {"complete", hfsa::is_complete(a)},
            {"unweighted", hfsa::is_unweighted(a)}});
      return det && probabilistic ? kOk : kFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "hfsa: " << e.what() << '\n';
    return kUsage;
  } catch (const hfsa::ParseError& e) {
    std::cerr << "hfsa: " << e.what() << '\n';
    return kUsage;
  } catch (const hfsa::Error& e) {
    std::cerr << "hfsa: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "hfsa: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
