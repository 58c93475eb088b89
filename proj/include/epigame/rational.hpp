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

#ifndef EPIGAME_RATIONAL_HPP_
#define EPIGAME_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace epigame {

// Exact payoff value. GMP keeps every result in lowest terms with a positive
// denominator as long as inputs are canonical; ParseRational canonicalizes.
using Rational = mpq_class;

// Accepts "-?[0-9]+" or "-?[0-9]+/[0-9]+" with a non-zero denominator.
std::optional<Rational> ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& q);

}  // namespace epigame

#endif  // EPIGAME_RATIONAL_HPP_
