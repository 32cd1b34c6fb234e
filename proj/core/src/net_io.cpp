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

#include "hfsa/net_io.hpp"

#include <fstream>
#include <sstream>

#include "hfsa/errors.hpp"
#include "text_util.hpp"

namespace hfsa {

using detail::format_shortest;
using detail::TokenReader;

namespace {

StateId read_state(TokenReader& tr) {
  const int at = tr.line();
  auto v = tr.count();
  if (v >= kNoState) throw ParseError("state id too large", at);
  return static_cast<StateId>(v);
}

}  // namespace

ThresholdNet read_net(std::istream& in) {
  TokenReader tr(in);
  ThresholdNet net;
  tr.expect(kNetMagic);
  {
    const int at = tr.line();
    if (tr.count() != 1) throw ParseError("unsupported threshold-net version", at);
  }
  tr.expect("method");
  {
    const int at = tr.line();
    try {
      net.method = parse_net_method(tr.next());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), at);
    }
  }
  tr.expect("alphabet");
  const std::size_t n_sym = tr.count();
  for (std::size_t i = 0; i < n_sym; ++i) {
    const int at = tr.line();
    std::string name = tr.next();
    if (net.alphabet.find(name)) throw ParseError("duplicate symbol '" + name + "'", at);
    net.alphabet.intern(name);
  }
  tr.expect("states");
  const std::size_t n = tr.count();
  tr.expect("initial");
  net.initial = read_state(tr);
  if (net.initial >= n) throw ParseError("initial state out of range", tr.line());
  tr.expect("finals");
  net.finals.assign(n, 0);
  for (std::size_t i = 0, k = tr.count(); i < k; ++i) {
    const int at = tr.line();
    StateId q = read_state(tr);
    if (q >= n) throw ParseError("final state out of range", at);
    net.finals[q] = 1;
  }

  tr.expect("code");
  net.code.n_states = n;
  net.code.n_symbols = n_sym;
  {
    const int at = tr.line();
    const std::string kind = tr.next();
    if (kind == "onehot") {
      net.code.kind = CodeKind::kOneHot;
    } else if (kind == "twohot") {
      net.code.kind = CodeKind::kTwoHot;
      net.code.base = tr.count();
    } else if (kind == "fourhot") {
      net.code.kind = CodeKind::kFourHot;
      net.code.base = tr.count();
      for (std::size_t q = 0; q < n; ++q) net.code.permutation.push_back(read_state(tr));
    } else {
      throw ParseError("unknown code '" + kind + "'", at);
    }
    if (net.code.kind == CodeKind::kTwoHot && net.code.base != ceil_root(n, 2)) {
      throw ParseError("two-hot base must be ceil(sqrt(states))", at);
    }
    if (net.code.kind == CodeKind::kFourHot && net.code.base != ceil_root(n, 4)) {
      throw ParseError("four-hot base must be ceil(states^(1/4))", at);
    }
  }

  tr.expect("data");
  {
    const int at = tr.line();
    if (tr.count() != net.code.data_size()) throw ParseError("data size does not match the code", at);
    net.initial_data.assign(net.code.data_size(), 0);
    for (std::size_t i = 0, k = tr.count(); i < k; ++i) {
      const int at2 = tr.line();
      auto c = tr.count();
      if (c >= net.initial_data.size()) throw ParseError("data cell out of range", at2);
      net.initial_data[c] = 1;
    }
  }

  tr.expect("layers");
  net.layers.resize(tr.count());
  for (auto& layer : net.layers) {
    tr.expect("layer");
    layer.resize(tr.count());
    for (auto& neuron : layer) {
      tr.expect("u");
      neuron.bias = tr.real();
      neuron.inputs.resize(tr.count());
      for (auto& input : neuron.inputs) {
        const int at = tr.line();
        const std::string src = tr.next();
        if (src == "d") {
          input.source = kSourceData;
        } else if (src == "y") {
          input.source = kSourceSymbol;
        } else {
          auto l = detail::parse_count(src, at);
          if (l >= net.layers.size()) throw ParseError("bad input source '" + src + "'", at);
          input.source = static_cast<std::int32_t>(l);
        }
        auto idx = tr.count();
        if (idx > UINT32_MAX) throw ParseError("input index too large", at);
        input.index = static_cast<std::uint32_t>(idx);
        input.weight = tr.real();
      }
    }
  }
  tr.expect("end");
  if (!tr.done()) throw ParseError("trailing input after 'end'", tr.line());
  try {
    net.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("invalid network: ") + e.what());
  }
  return net;
}

ThresholdNet parse_net(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_net(in);
}

ThresholdNet load_net(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_net(in);
}

void write_net(std::ostream& out, const ThresholdNet& net) {
  out << kNetMagic << " 1\n";
  out << "method " << net_method_name(net.method) << '\n';
  out << "alphabet " << net.alphabet.size();
  for (const auto& n : net.alphabet.names()) out << ' ' << n;
  out << "\nstates " << net.code.n_states << "\ninitial " << net.initial << '\n';
  std::vector<StateId> finals;
  for (StateId q = 0; q < net.finals.size(); ++q) {
    if (net.finals[q]) finals.push_back(q);
  }
  out << "finals " << finals.size();
  for (auto q : finals) out << ' ' << q;
  out << "\ncode " << code_kind_name(net.code.kind);
  if (net.code.kind != CodeKind::kOneHot) out << ' ' << net.code.base;
  for (auto p : net.code.permutation) out << ' ' << p;
  std::vector<std::size_t> hot;
  for (std::size_t i = 0; i < net.initial_data.size(); ++i) {
    if (net.initial_data[i]) hot.push_back(i);
  }
  out << "\ndata " << net.initial_data.size() << ' ' << hot.size();
  for (auto c : hot) out << ' ' << c;
  out << "\nlayers " << net.layers.size() << '\n';
  for (const auto& layer : net.layers) {
    out << "layer " << layer.size() << '\n';
    for (const auto& neuron : layer) {
      out << "u " << format_shortest(neuron.bias) << ' ' << neuron.inputs.size();
      for (const auto& in : neuron.inputs) {
        out << ' ';
        if (in.source == kSourceData) {
          out << 'd';
        } else if (in.source == kSourceSymbol) {
          out << 'y';
        } else {
          out << in.source;
        }
        out << ' ' << in.index << ' ' << format_shortest(in.weight);
      }
      out << '\n';
    }
  }
  out << "end\n";
}

std::string print_net(const ThresholdNet& net) {
  std::ostringstream out;
  write_net(out, net);
  return out.str();
}

void save_net(const std::string& path, const ThresholdNet& net) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_net(out, net);
}

}  // namespace hfsa
