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

#ifndef HFSA_ALPHABET_HPP_
#define HFSA_ALPHABET_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hfsa {

using SymbolId = std::uint32_t;
using StateId = std::uint32_t;

inline constexpr StateId kNoState = static_cast<StateId>(-1);

// Interned symbol table. Ids are dense 0..size()-1 in insertion order. The
// end-of-sequence symbol is not a member; language models address it with
// the virtual index size().
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  // Returns the id of `name`, adding it if it is new.
  SymbolId intern(std::string_view name);

  std::optional<SymbolId> find(std::string_view name) const;

  // Like find(), but throws UnknownSymbol.
  SymbolId at(std::string_view name) const;

  const std::string& name(SymbolId id) const;
  std::size_t size() const { return names_.size(); }
  SymbolId eos() const { return static_cast<SymbolId>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  // Splits a whitespace-separated list of symbol names into ids.
  std::vector<SymbolId> parse(std::string_view text) const;
  std::string format(std::span<const SymbolId> symbols) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> index_;
};

}  // namespace hfsa

#endif  // HFSA_ALPHABET_HPP_
