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

#include "epigame/report.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "epigame/errors.hpp"

namespace epigame {
namespace {

template <typename T>
void ReadEnv(const char* name, T& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string_view s(raw);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ArgumentError(std::string("invalid value for ") + name + ": '" +
                        raw + "'");
  }
  out = value;
}

}  // namespace

std::string ToString(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kPreconditionViolated:
      return "precondition_violated";
  }
  return "fail";
}

Verdict ParseVerdict(const std::string& s) {
  if (s == "pass") return Verdict::kPass;
  if (s == "fail") return Verdict::kFail;
  if (s == "precondition_violated") return Verdict::kPreconditionViolated;
  throw ArgumentError("unknown verdict '" + s + "'");
}

void CheckReport::Fail(Json finding) {
  if (verdict == Verdict::kPass) verdict = Verdict::kFail;
  findings.push_back(std::move(finding));
}

void CheckReport::PreconditionViolated(Json finding) {
  verdict = Verdict::kPreconditionViolated;
  findings.push_back(std::move(finding));
}

Json CheckReport::ToJson() const {
  Json j;
  j["check"] = check;
  j["verdict"] = ToString(verdict);
  j["details"] = details;
  j["findings"] = findings;
  return j;
}

CheckReport CheckReport::FromJson(const Json& j) {
  CheckReport r;
  r.check = j.at("check").get<std::string>();
  r.verdict = ParseVerdict(j.at("verdict").get<std::string>());
  r.details = j.at("details");
  for (const auto& f : j.at("findings")) r.findings.push_back(f);
  return r;
}

Budget Budget::FromEnvironment() {
  Budget b;
  ReadEnv("EPIGAME_LATTICE_BITS", b.lattice_bits);
  ReadEnv("EPIGAME_MODEL_BUDGET", b.models);
  ReadEnv("EPIGAME_ITERATION_BUDGET", b.iteration_steps);
  return b;
}

}  // namespace epigame
