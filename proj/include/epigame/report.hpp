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

#ifndef EPIGAME_REPORT_HPP_
#define EPIGAME_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace epigame {

using Json = nlohmann::ordered_json;

enum class Verdict { kPass, kFail, kPreconditionViolated };

std::string ToString(Verdict v);
Verdict ParseVerdict(const std::string& s);

// Result of one verifier run. Counterexamples are data, never exceptions.
struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::kPass;
  Json details = Json::object();
  std::vector<Json> findings;

  bool passed() const { return verdict == Verdict::kPass; }

  // Records a counterexample; a precondition verdict is never downgraded.
  void Fail(Json finding);
  void PreconditionViolated(Json finding);

  Json ToJson() const;
  static CheckReport FromJson(const Json& j);

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// Enumeration caps. Defaults can be overridden through EPIGAME_LATTICE_BITS,
// EPIGAME_MODEL_BUDGET and EPIGAME_ITERATION_BUDGET.
struct Budget {
  std::size_t lattice_bits = 16;
  std::uint64_t models = 50'000'000;
  // Zero means the default of 10 * sum_i |T_i|.
  std::size_t iteration_steps = 0;

  static Budget FromEnvironment();
};

}  // namespace epigame

#endif  // EPIGAME_REPORT_HPP_
