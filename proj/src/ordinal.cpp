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

#include "epigame/ordinal.hpp"

#include <charconv>

namespace epigame {
namespace {

std::optional<std::uint64_t> ParseCount(std::string_view s) {
  std::uint64_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string ToString(const Ordinal& o) {
  if (o.omega == 0) return std::to_string(o.finite);
  return std::to_string(o.omega) + "w+" + std::to_string(o.finite);
}

std::optional<Ordinal> ParseOrdinal(std::string_view text) {
  const auto w = text.find('w');
  if (w == std::string_view::npos) {
    auto b = ParseCount(text);
    if (!b) return std::nullopt;
    return Ordinal::Finite(*b);
  }
  std::string_view coeff = text.substr(0, w);
  if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
  std::uint64_t a = 1;
  if (!coeff.empty()) {
    auto parsed = ParseCount(coeff);
    if (!parsed) return std::nullopt;
    a = *parsed;
  } else if (w > 0) {
    return std::nullopt;  // bare "*w"
  }
  std::string_view rest = text.substr(w + 1);
  std::uint64_t b = 0;
  if (!rest.empty()) {
    if (rest.front() != '+') return std::nullopt;
    auto parsed = ParseCount(rest.substr(1));
    if (!parsed) return std::nullopt;
    b = *parsed;
  }
  return Ordinal{a, b};
}

}  // namespace epigame
