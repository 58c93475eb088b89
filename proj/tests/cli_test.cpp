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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "epigame/cli.hpp"
#include "epigame/fixtures.hpp"
#include "epigame/game.hpp"
#include "epigame/iteration.hpp"
#include "epigame/transfinite.hpp"
#include "test_support.hpp"

namespace epigame {
namespace {

using testing::FixturePath;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.starts_with("@")) a = FixturePath(a.substr(1));
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

struct Case {
  std::vector<std::string> args;
  int expected;
};

TEST(CliTest, ExitCodeMatrix) {
  const std::vector<Case> cases = {
      {{"eliminate", "--prop", "sd:l", "@pd.game"}, kExitPass},
      {{"eliminate", "--prop", "msd:l", "--json", "@mix.game"}, kExitPass},
      {{"eliminate", "--prop", "br:l:ind", "@3p.game"}, kExitInputError},
      {{"eliminate", "--player", "1=sd:g", "--player", "2=br:g:pure", "@chain.game"}, kExitPass},
      {{"eliminate", "--prop", "sd:l", "--player", "1=sd:g", "@pd.game"}, kExitInputError},
      {{"eliminate", "--player", "1=sd:g", "@pd.game"}, kExitInputError},
      {{"eliminate", "--prop", "sd:x", "@pd.game"}, kExitInputError},
      {{"eliminate", "@pd.game"}, kExitInputError},
      {{"eliminate", "--prop", "sd:l", "@missing.game"}, kExitInputError},
      {{"check", "pearce", "@mix.game"}, kExitPass},
      {{"check", "monotone", "--prop", "sd:g", "@chain.game"}, kExitPass},
      {{"check", "monotone", "--prop", "sd:l", "@nonmono.game"}, kExitCounterexample},
      {{"check", "tarski", "--prop", "sd:g", "@chain.game"}, kExitPass},
      {{"check", "tarski", "--prop", "sd:l", "@nonmono.game"}, kExitCounterexample},
      {{"check", "singleton", "--prop", "sd:l", "@pd.game"}, kExitPass},
      {{"check", "singleton", "--prop", "sd:g", "@pd.game"}, kExitCounterexample},
      {{"check", "just", "@chain.game"}, kExitPass},
      {{"check", "just1", "@mix.game"}, kExitPass},
      {{"check", "contracting", "--prop", "msd:l", "@mix.game"}, kExitPass},
      {{"check", "inclusion", "--prop", "br:g:pure", "--prop2", "sd:l", "@chain.game"},
       kExitPass},
      {{"check", "monotone", "@pd.game"}, kExitInputError},
      {{"check", "bogus", "@pd.game"}, kExitInputError},
      {{"--lattice-bits", "4", "check", "tarski", "--prop", "sd:g", "@chain.game"},
       kExitInputError},
      {{"epistemic", "enumerate", "--omega", "4", "--prop", "sd:g", "@pd.game"}, kExitPass},
      {{"epistemic", "enumerate", "--omega", "4", "--prop", "sd:l", "@pd.game"}, kExitPass},
      {{"epistemic", "enumerate", "--omega", "4", "--prop", "sd:l", "@nonmono.game"},
       kExitPass},
      {{"epistemic", "enumerate", "--omega", "1", "--prop", "sd:g", "@pd.game"},
       kExitInputError},
      {{"--model-budget", "10", "epistemic", "enumerate", "--omega", "4", "--prop", "sd:g",
        "@pd.game"},
       kExitInputError},
      {{"epistemic", "witness", "--theorem", "1", "--prop", "br:g:pure", "@mp.game"}, kExitPass},
      {{"epistemic", "witness", "--theorem", "2", "--prop", "sd:l", "--joint", "C,C",
        "@pd.game"},
       kExitPass},
      {{"epistemic", "witness", "--theorem", "2", "--prop", "sd:g", "@pd.game"},
       kExitInputError},
      {{"epistemic", "witness", "--theorem", "1", "--prop", "sd:l", "@nonmono.game"},
       kExitInputError},
      {{"epistemic", "witness", "--theorem", "3", "--prop", "sd:l", "@pd.game"},
       kExitInputError},
      {{"transfinite", "run", "--bound", "2w+5", "witness-tg"}, kExitPass},
      {{"transfinite", "run", "--bound", "0w+3", "witness-tg"}, kExitCounterexample},
      {{"transfinite", "run", "--bound", "1w+0", "embedded-finite-pd"}, kExitPass},
      {{"transfinite", "run", "--bound", "2w+5", "broken-limit"}, kExitCounterexample},
      {{"transfinite", "run", "--bound", "9w", "witness-tg"}, kExitInputError},
      {{"transfinite", "run", "--bound", "ww", "witness-tg"}, kExitInputError},
      {{"transfinite", "run", "--bound", "2w", "nope"}, kExitInputError},
      {{"transfinite", "list"}, kExitPass},
      {{"random", "--seed", "3", "--rows", "2", "--cols", "3"}, kExitPass},
      {{"random", "--rows", "0"}, kExitInputError},
      {{"--frobnicate", "eliminate", "--prop", "sd:l", "@pd.game"}, kExitInputError},
      {{"eliminate", "--prop", "sd:l", "--frobnicate", "@pd.game"}, kExitInputError},
      {{}, kExitInputError},
      {{"--help"}, kExitPass},
  };
  for (const Case& c : cases) {
    const CliRun r = Cli(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    EXPECT_EQ(r.code, c.expected) << joined << "\nstdout: " << r.out << "\nstderr: " << r.err;
  }
}

TEST(CliTest, EliminateOutputs) {
  const CliRun text = Cli({"eliminate", "--prop", "sd:l", "@pd.game"});
  EXPECT_NE(text.out.find("({D},{D})"), std::string::npos) << text.out;
  const CliRun json = Cli({"--json", "eliminate", "--prop", "msd:l", "@mix.game"});
  const Json j = Json::parse(json.out);
  EXPECT_EQ(j["outcome"], Json::parse(R"([["T","M"],["L","R"]])"));
  const Game mix = FixtureMix();
  const IterationTrace trace = TraceFromJson(mix, j);
  EXPECT_EQ(trace, Outcome(testing::Uniform("msd:l", mix), mix));
  EXPECT_EQ(TraceToJson(mix, trace)["outcome"], j["outcome"]);
}

TEST(CliTest, UnsupportedConfigurationMessage) {
  const CliRun r = Cli({"eliminate", "--prop", "br:l:ind", "@3p.game"});
  EXPECT_NE(r.err.find("unsupported configuration"), std::string::npos) << r.err;
}

TEST(CliTest, CounterexampleIsReported) {
  const CliRun r = Cli({"--json", "check", "monotone", "--prop", "sd:l", "@nonmono.game"});
  ASSERT_EQ(r.code, kExitCounterexample);
  const CheckReport report = CheckReport::FromJson(Json::parse(r.out));
  EXPECT_EQ(report.verdict, Verdict::kFail);
  ASSERT_FALSE(report.findings.empty());
  EXPECT_EQ(CheckReport::FromJson(report.ToJson()), report);
}

TEST(CliTest, TransfiniteJsonRoundTrips) {
  const CliRun r = Cli({"--json", "transfinite", "run", "--bound", "2w+5", "witness-tg"});
  ASSERT_EQ(r.code, kExitPass);
  const Json j = Json::parse(r.out);
  const SymbolicTrace trace = SymbolicTraceFromJson(j);
  EXPECT_EQ(trace, IterateSymbolic(WitnessTG(), Ordinal{2, 5}));
  EXPECT_EQ(j["closure_ordinal"], "1w+1");
  const CliRun unresolved = Cli({"--json", "transfinite", "run", "--bound", "0w+3", "witness-tg"});
  EXPECT_EQ(Json::parse(unresolved.out)["status"], "unresolved_at_bound");
}

TEST(CliTest, JsonIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"--json", "eliminate", "--prop", "sd:l", "@chain.game"},
      {"--json", "check", "pearce", "@mix.game"},
      {"--json", "check", "just1", "@chain.game"},
      {"--json", "epistemic", "enumerate", "--omega", "3", "--prop", "br:g:pure", "@mp.game"},
      {"--json", "epistemic", "witness", "--theorem", "1", "--prop", "sd:g", "@chain.game"},
      {"--json", "transfinite", "run", "--bound", "2w+5", "witness-tg"},
      {"random", "--seed", "99", "--rows", "4", "--cols", "3"},
  };
  for (const auto& cmd : commands) {
    const CliRun a = Cli(cmd);
    const CliRun b = Cli(cmd);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd[1];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(CliTest, RandomGameParsesBack) {
  const CliRun r = Cli({"random", "--seed", "7", "--rows", "3", "--cols", "2"});
  const Game g = ParseGame(r.out);
  EXPECT_EQ(g.num_strategies(0), 3U);
  EXPECT_EQ(g.num_strategies(1), 2U);
  EXPECT_EQ(WriteGame(g), r.out);
}

TEST(CliTest, EnvironmentBudgetOverride) {
  ::setenv("EPIGAME_MODEL_BUDGET", "10", 1);
  const CliRun small = Cli({"epistemic", "enumerate", "--omega", "4", "--prop", "sd:g", "@pd.game"});
  ::setenv("EPIGAME_MODEL_BUDGET", "junk", 1);
  const CliRun junk = Cli({"epistemic", "enumerate", "--omega", "4", "--prop", "sd:g", "@pd.game"});
  ::unsetenv("EPIGAME_MODEL_BUDGET");
  EXPECT_EQ(small.code, kExitInputError);
  EXPECT_NE(small.err.find("57600"), std::string::npos) << small.err;
  EXPECT_EQ(junk.code, kExitInputError);
}

}  // namespace
}  // namespace epigame
