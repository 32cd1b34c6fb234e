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

#include "hfsa/alphabet.hpp"

#include <cctype>

#include "hfsa/errors.hpp"

namespace hfsa {

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (find(n)) throw InvalidArgument("duplicate symbol '" + n + "'");
    intern(n);
  }
}

SymbolId Alphabet::intern(std::string_view name) {
  if (name.empty()) throw InvalidArgument("empty symbol name");
  std::string key(name);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  auto id = static_cast<SymbolId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolId Alphabet::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
}

const std::string& Alphabet::name(SymbolId id) const {
  if (id >= names_.size()) {
    throw UnknownSymbol("symbol id " + std::to_string(id) + " out of range");
  }
  return names_[id];
}

std::vector<SymbolId> Alphabet::parse(std::string_view text) const {
  std::vector<SymbolId> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(at(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string Alphabet::format(std::span<const SymbolId> symbols) const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ' ';
    out += name(symbols[i]);
  }
  return out;
}

}  // namespace hfsa
