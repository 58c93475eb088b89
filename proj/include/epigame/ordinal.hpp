// Copyright 2026 The epigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPIGAME_ORDINAL_HPP_
#define EPIGAME_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace epigame {

// Ordinal below omega^2 in normal form omega*a + b.
struct Ordinal {
  std::uint64_t omega = 0;   // a
  std::uint64_t finite = 0;  // b

  static constexpr Ordinal Finite(std::uint64_t b) { return {0, b}; }
  static constexpr Ordinal OmegaTimes(std::uint64_t a) { return {a, 0}; }

  Ordinal Successor() const { return {omega, finite + 1}; }
  bool IsLimit() const { return omega > 0 && finite == 0; }

  friend auto operator<=>(const Ordinal&, const Ordinal&) = default;
};

// "<b>" when a = 0, otherwise "<a>w+<b>".
std::string ToString(const Ordinal& o);

// Accepts "b", "aw+b", "a*w+b", "w+b", "aw", "w".
std::optional<Ordinal> ParseOrdinal(std::string_view text);

}  // namespace epigame

#endif  // EPIGAME_ORDINAL_HPP_
