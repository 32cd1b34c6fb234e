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

#include "hfsa/wfsa_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "hfsa/errors.hpp"
#include "text_util.hpp"
#include "wfsa_reader.hpp"

namespace hfsa {

using detail::format_shortest;

Wfsa read_wfsa(std::istream& in) {
  auto parts = detail::read_wfsa_parts<double>(
      in, [](std::string_view tok, int line) { return detail::parse_real(tok, line); },
      0.0, 1.0);
  std::vector<Transition> arcs;
  arcs.reserve(parts.arcs.size());
  for (const auto& a : parts.arcs) arcs.push_back({a.src, a.sym, a.weight, a.dst});
  return Wfsa(std::move(parts.alphabet), parts.n_states, std::move(arcs),
              std::move(parts.initial), std::move(parts.final_weights));
}

Wfsa parse_wfsa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_wfsa(in);
}

Wfsa load_wfsa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_wfsa(in);
}

void write_wfsa(std::ostream& out, const Wfsa& a) {
  const bool plain = is_unweighted(a);
  out << "@alphabet";
  for (const auto& n : a.alphabet().names()) out << ' ' << n;
  out << '\n' << "@states " << a.num_states() << '\n';
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.initial(q) == 0.0) continue;
    out << "@init " << q;
    if (!plain) out << ' ' << format_shortest(a.initial(q));
    out << '\n';
  }
  for (const auto& t : a.transitions()) {
    out << t.src << ' ' << t.dst << ' ' << a.alphabet().name(t.sym);
    if (!plain) out << ' ' << format_shortest(t.weight);
    out << '\n';
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.final_weight(q) == 0.0) continue;
    out << q;
    if (!plain) out << ' ' << format_shortest(a.final_weight(q));
    out << '\n';
  }
}

std::string print_wfsa(const Wfsa& a) {
  std::ostringstream out;
  write_wfsa(out, a);
  return out.str();
}

void save_wfsa(const std::string& path, const Wfsa& a) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_wfsa(out, a);
}

}  // namespace hfsa
