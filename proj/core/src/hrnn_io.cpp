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

#include "hfsa/hrnn_io.hpp"

#include <fstream>
#include <sstream>

#include "hfsa/errors.hpp"
#include "text_util.hpp"

namespace hfsa {

using detail::format_shortest;
using detail::TokenReader;

namespace {

std::vector<double> read_values(TokenReader& tr, std::size_t n,
                                bool allow_neg_inf = false) {
  std::vector<double> v(n);
  for (auto& x : v) x = tr.real(allow_neg_inf);
  return v;
}

Matrix<double> read_matrix(TokenReader& tr, std::string_view tag,
                           std::size_t rows, std::size_t cols) {
  tr.expect(tag);
  const int at = tr.line();
  if (tr.count() != rows || tr.count() != cols) {
    throw ParseError(std::string(tag) + " has the wrong shape", at);
  }
  return Matrix<double>(rows, cols, read_values(tr, rows * cols));
}

std::vector<double> read_vector(TokenReader& tr, std::string_view tag,
                                std::size_t n) {
  tr.expect(tag);
  const int at = tr.line();
  if (tr.count() != n) {
    throw ParseError(std::string(tag) + " has the wrong length", at);
  }
  return read_values(tr, n);
}

template <typename T, typename F>
void write_matrix(std::ostream& out, std::string_view tag, const Matrix<T>& m,
                  F&& value) {
  out << tag << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? " " : "") << format_shortest(value(m(r, c)));
    }
    out << '\n';
  }
}

}  // namespace

HrnnLm read_hrnn(std::istream& in) {
  TokenReader tr(in);
  tr.expect(kHrnnMagic);
  {
    const int at = tr.line();
    if (tr.count() != 1) throw ParseError("unsupported hrnn-lm version", at);
  }
  tr.expect("alphabet");
  const std::size_t n_sym = tr.count();
  Alphabet alphabet;
  for (std::size_t i = 0; i < n_sym; ++i) {
    const int at = tr.line();
    std::string name = tr.next();
    if (alphabet.find(name)) throw ParseError("duplicate symbol '" + name + "'", at);
    alphabet.intern(name);
  }
  tr.expect("projection");
  Projection proj;
  {
    const int at = tr.line();
    try {
      proj = parse_projection(tr.next());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), at);
    }
  }
  tr.expect("D");
  const std::size_t D = tr.count();
  tr.expect("R");
  const std::size_t R = tr.count();

  Matrix<double> U = read_matrix(tr, "U", D, D);
  Matrix<double> V = read_matrix(tr, "V", D, R);
  std::vector<double> b = read_vector(tr, "b", D);
  HiddenState h0(D);
  {
    const int at = tr.line();
    auto raw = read_vector(tr, "h0", D);
    for (std::size_t i = 0; i < D; ++i) {
      if (raw[i] != 0.0 && raw[i] != 1.0) throw ParseError("h0 must be 0/1", at);
      h0[i] = raw[i] == 1.0;
    }
  }
  tr.expect("E");
  {
    const int at = tr.line();
    if (tr.count() != n_sym + 1 || tr.count() != D) {
      throw ParseError("E has the wrong shape", at);
    }
  }
  std::vector<ExtReal> e;
  e.reserve((n_sym + 1) * D);
  for (double x : read_values(tr, (n_sym + 1) * D, true)) {
    e.push_back(std::isinf(x) ? ExtReal::neg_inf() : ExtReal(x));
  }
  Matrix<ExtReal> E(n_sym + 1, D, std::move(e));
  std::optional<Matrix<double>> embed;
  if (tr.peek() == "embed") embed = read_matrix(tr, "embed", R, n_sym);
  tr.expect("end");
  if (!tr.done()) throw ParseError("trailing input after 'end'", tr.line());
  return HrnnLm(std::move(alphabet), std::move(U), std::move(V), std::move(b),
                std::move(h0), std::move(E), proj, std::move(embed));
}

HrnnLm parse_hrnn(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hrnn(in);
}

HrnnLm load_hrnn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_hrnn(in);
}

void write_hrnn(std::ostream& out, const HrnnLm& lm) {
  const auto& names = lm.alphabet().names();
  out << kHrnnMagic << " 1\n";
  out << "alphabet " << names.size();
  for (const auto& n : names) out << ' ' << n;
  out << "\nprojection " << projection_name(lm.projection()) << '\n';
  out << "D " << lm.hidden_size() << "\nR " << lm.input_size() << '\n';
  auto id = [](double x) { return x; };
  write_matrix(out, "U", lm.U(), id);
  write_matrix(out, "V", lm.V(), id);
  out << "b " << lm.hidden_size() << '\n';
  for (std::size_t i = 0; i < lm.bias().size(); ++i) {
    out << (i ? " " : "") << format_shortest(lm.bias()[i]);
  }
  out << "\nh0 " << lm.hidden_size() << '\n';
  for (std::size_t i = 0; i < lm.h0().size(); ++i) {
    out << (i ? " " : "") << int(lm.h0()[i]);
  }
  out << '\n';
  write_matrix(out, "E", lm.E(), [](ExtReal x) { return x.value(); });
  if (lm.embed()) write_matrix(out, "embed", *lm.embed(), id);
  out << "end\n";
}

std::string print_hrnn(const HrnnLm& lm) {
  std::ostringstream out;
  write_hrnn(out, lm);
  return out.str();
}

void save_hrnn(const std::string& path, const HrnnLm& lm) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_hrnn(out, lm);
}

}  // namespace hfsa
