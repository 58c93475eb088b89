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

#include "epigame/rational.hpp"

#include <algorithm>
#include <cctype>

namespace epigame {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  if (!AllDigits(num)) return std::nullopt;
  if (slash != std::string_view::npos) {
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(den)) return std::nullopt;
    if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
      return std::nullopt;
    }
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace epigame
