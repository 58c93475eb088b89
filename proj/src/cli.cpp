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

#include "epigame/cli.hpp"

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epigame/epistemic.hpp"
#include "epigame/errors.hpp"
#include "epigame/fixtures.hpp"
#include "epigame/property.hpp"
#include "epigame/transfinite.hpp"

namespace epigame {
namespace {

struct Config {
  std::string game_path;
  std::string prop;
  std::string prop2;
  std::vector<std::string> players;
  std::string check_name;
  std::string joint;
  std::string bound;
  std::string witness;
  std::size_t omega = 4;
  int theorem = 1;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t rows = 3;
  std::size_t cols = 3;
  bool json = false;
  std::optional<std::size_t> lattice_bits;
  std::optional<std::uint64_t> model_budget;
  std::optional<std::size_t> step_budget;
};

Budget MakeBudget(const Config& c) {
  Budget b = Budget::FromEnvironment();
  if (c.lattice_bits) b.lattice_bits = *c.lattice_bits;
  if (c.model_budget) b.models = *c.model_budget;
  if (c.step_budget) b.iteration_steps = *c.step_budget;
  return b;
}

int ExitFor(Verdict v) { return v == Verdict::kPass ? kExitPass : kExitCounterexample; }

PropertyProfile RequireProfile(const std::string& text, const Game& game,
                               const char* flag) {
  if (text.empty()) throw ArgumentError(std::string(flag) + " is required");
  return PropertyProfile::Parse(text, game.num_players());
}

void PrintDetails(std::ostream& out, const Json& details) {
  for (const auto& [key, value] : details.items()) {
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

void PrintReport(std::ostream& out, const CheckReport& report) {
  out << report.check << ": " << ToString(report.verdict) << "\n";
  PrintDetails(out, report.details);
  for (const auto& f : report.findings) out << "  finding: " << f.dump() << "\n";
}

int Emit(std::ostream& out, const Config& c, const CheckReport& report) {
  if (c.json) {
    out << report.ToJson().dump(2) << "\n";
  } else {
    PrintReport(out, report);
  }
  return ExitFor(report.verdict);
}

int CmdEliminate(const Config& c, std::ostream& out) {
  const Game game = LoadGameFile(c.game_path);
  const auto profile = RequireProfile(c.prop, game, "--prop");
  const Budget budget = MakeBudget(c);
  const auto trace = Outcome(profile, game, budget.iteration_steps);
  if (c.json) {
    Json j = Json::object();
    j["game"] = game.name();
    j["profile"] = profile.ToString();
    const Json trace_json = TraceToJson(game, trace);
    for (const auto& [k, v] : trace_json.items()) j[k] = v;
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << "game: " << game.name() << "\n";
  out << "profile: " << profile.ToString() << "\n";
  for (const auto& step : trace.steps) {
    out << "T^" << ToString(step.ordinal) << " = " << step.restriction.ToString(game) << "\n";
  }
  out << "closure ordinal: " << ToString(trace.closure_ordinal) << "\n";
  out << "outcome: " << trace.outcome.ToString(game) << "\n";
  return kExitPass;
}

CheckReport PearceOverLattice(const Game& game, const Budget& budget) {
  const RestrictionLattice lattice(game, budget.lattice_bits);
  CheckReport report;
  report.check = "pearce_equivalence";
  std::uint64_t mismatches = 0;
  for (std::uint64_t key = 0; key < lattice.size(); ++key) {
    const auto single = PearceEquivalenceCheck(game, lattice.Decode(key));
    if (!single.passed()) {
      ++mismatches;
      if (report.findings.size() < 100) report.Fail(single.ToJson());
    }
  }
  report.details["restrictions_checked"] = lattice.size();
  report.details["mismatches"] = mismatches;
  if (mismatches > 0) report.verdict = Verdict::kFail;
  return report;
}

int CmdCheck(const Config& c, std::ostream& out) {
  const Game game = LoadGameFile(c.game_path);
  const Budget budget = MakeBudget(c);
  const std::string& name = c.check_name;
  auto spec = [&]() {
    if (c.prop.empty()) throw ArgumentError("--prop is required for check " + name);
    return PropertySpec::Parse(c.prop);
  };
  auto op = [&](const std::string& text, const char* flag) {
    return MakeOperator(RequireProfile(text, game, flag), game);
  };
  CheckReport report;
  if (name == "tarski") {
    report = VerifyTarski(op(c.prop, "--prop"), game, budget);
  } else if (name == "monotone") {
    report = CheckPropertyMonotone(spec(), game, budget);
  } else if (name == "singleton") {
    report = CheckSingletonCondition(spec(), game);
  } else if (name == "pearce") {
    report = PearceOverLattice(game, budget);
  } else if (name == "just") {
    report = VerifyTheoremJust(game, budget);
  } else if (name == "just1") {
    report = VerifyTheoremJust1(game, budget);
  } else if (name == "inclusion") {
    report = VerifyInclusionLemma(op(c.prop, "--prop"), op(c.prop2, "--prop2"), game, budget);
  } else if (name == "contracting") {
    report = VerifyContractingOutcome(op(c.prop, "--prop"), game, budget);
  } else {
    throw ArgumentError("unknown check '" + name + "'");
  }
  return Emit(out, c, report);
}

JointStrategy ParseJoint(const Game& game, const std::string& text) {
  JointStrategy joint;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    const PlayerIndex i = joint.size();
    if (i >= game.num_players()) throw ArgumentError("--joint names too many strategies");
    const auto s = game.FindStrategy(i, name);
    if (!s) {
      throw ArgumentError("player " + std::to_string(i + 1) + " has no strategy '" +
                          name + "'");
    }
    joint.push_back(*s);
  }
  if (joint.size() != game.num_players()) {
    throw ArgumentError("--joint needs one strategy per player");
  }
  return joint;
}

int CmdEnumerate(const Config& c, std::ostream& out) {
  const Game game = LoadGameFile(c.game_path);
  const auto profile = RequireProfile(c.prop, game, "--prop");
  const auto report = VerifyEpistemic(game, c.omega, profile, MakeBudget(c));
  if (c.json) {
    out << report.ToJson(game).dump(2) << "\n";
  } else {
    out << "profile: " << report.profile << "\n";
    out << "states: " << report.omega_size << "\n";
    out << "models enumerated: " << report.models_enumerated << "\n";
    out << "CK: " << report.ck_restriction.ToString(game) << "\n";
    out << "CB: " << report.cb_restriction.ToString(game) << "\n";
    out << "outcome: " << report.operator_outcome.ToString(game) << "\n";
    out << "compared against:";
    for (const auto& a : report.applicable) out << " " << a;
    out << "\nverdict: " << ToString(report.verdict) << "\n";
    for (const auto& f : report.findings) out << "  finding: " << f.dump() << "\n";
  }
  return ExitFor(report.verdict);
}

int CmdWitness(const Config& c, std::ostream& out) {
  const Game game = LoadGameFile(c.game_path);
  const auto profile = RequireProfile(c.prop, game, "--prop");
  if (c.theorem == 1) {
    const auto w = WitnessModelThm1(game, profile, MakeBudget(c));
    CheckReport report = w.report;
    report.details["model"] = ModelToJson(game, w.model);
    return Emit(out, c, report);
  }
  if (c.theorem != 2) throw ArgumentError("--theorem must be 1 or 2");
  std::vector<JointStrategy> targets;
  if (!c.joint.empty()) {
    targets.push_back(ParseJoint(game, c.joint));
  } else {
    for (std::size_t k = 0; k < game.num_joint(); ++k) targets.push_back(game.JointFromIndex(k));
  }
  CheckReport report;
  report.check = "witness_thm2";
  report.details["profile"] = profile.ToString();
  Json targets_json = Json::array();
  for (const auto& joint : targets) {
    const auto w = WitnessModelThm2(game, profile, joint);
    targets_json.push_back(w.report.details.at("target"));
    for (const auto& f : w.report.findings) report.Fail(f);
  }
  report.details["targets_checked"] = targets_json;
  return Emit(out, c, report);
}

int CmdTransfiniteRun(const Config& c, std::ostream& out) {
  const auto bound = ParseOrdinal(c.bound);
  if (!bound) throw ArgumentError("malformed ordinal '" + c.bound + "'");
  const SymbolicGame game = FindWitness(c.witness);
  const auto validation = ValidateWitness(game, c.samples);
  if (!validation.passed()) {
    if (c.json) {
      Json j = {{"validation", validation.ToJson()}};
      out << j.dump(2) << "\n";
    } else {
      PrintReport(out, validation);
    }
    return kExitCounterexample;
  }
  const auto trace = IterateSymbolic(game, *bound);
  if (c.json) {
    Json j = SymbolicTraceToJson(game, trace);
    j["validation"] = validation.ToJson();
    out << j.dump(2) << "\n";
  } else {
    out << "witness: " << game.name << " (encodes " << game.encodes << ")\n";
    out << "validation: " << ToString(validation.verdict) << "\n";
    for (const auto& step : trace.steps) {
      out << "T^" << ToString(step.ordinal) << " = " << ToString(step.restriction) << "\n";
    }
    if (trace.status == SymbolicStatus::kFixpoint) {
      out << "fixpoint at closure ordinal " << ToString(*trace.closure_ordinal);
      if (trace.closure_ordinal->omega > 0) out << " (beyond w)";
      out << "\n";
    } else {
      out << "unresolved at bound " << ToString(trace.bound) << "\n";
    }
  }
  return trace.status == SymbolicStatus::kFixpoint ? kExitPass : kExitCounterexample;
}

int CmdTransfiniteList(const Config& c, std::ostream& out) {
  Json list = Json::array();
  for (const auto& name : WitnessNames()) {
    const auto g = FindWitness(name);
    list.push_back({{"name", name}, {"encodes", g.encodes},
                    {"claims_transfinite", g.claims_transfinite}});
  }
  if (c.json) {
    out << list.dump(2) << "\n";
  } else {
    for (const auto& w : list) {
      out << w["name"].get<std::string>() << "  encodes " << w["encodes"].get<std::string>()
          << (w["claims_transfinite"].get<bool>() ? "  (transfinite)" : "") << "\n";
    }
  }
  return kExitPass;
}

int CmdRandom(const Config& c, std::ostream& out) {
  if (c.rows < 1 || c.cols < 1 || c.rows > 64 || c.cols > 64) {
    throw ArgumentError("--rows and --cols must lie in [1, 64]");
  }
  std::mt19937_64 rng(c.seed);
  out << WriteGame(RandomGame(rng, c.rows, c.cols));
  return kExitPass;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated elimination, fixpoint and epistemic checks for strategic games",
               "epigame"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--lattice-bits", c.lattice_bits,
                 "Largest sum of strategy counts for lattice-wide checks");
  app.add_option("--model-budget", c.model_budget, "Most epistemic models to enumerate");
  app.add_option("--step-budget", c.step_budget, "Most elimination steps");
  app.add_flag("--json", c.json, "Write JSON instead of text");

  auto* eliminate = app.add_subcommand("eliminate", "Run iterated elimination");
  eliminate->add_option("--prop", c.prop, "Property or per-player profile");
  eliminate->add_option("--player", c.players, "Per-player property, e.g. 1=sd:g (repeatable)");
  eliminate->add_option("game", c.game_path, "Game file")->required();

  auto* check = app.add_subcommand("check", "Run a verifier");
  check->add_option("name", c.check_name, "Verifier")
      ->required()
      ->check(CLI::IsMember({"tarski", "monotone", "singleton", "pearce", "just", "just1",
                             "inclusion", "contracting"}));
  check->add_option("--prop", c.prop, "Property or profile");
  check->add_option("--player", c.players, "Per-player property, e.g. 1=sd:g (repeatable)");
  check->add_option("--prop2", c.prop2, "Second profile (inclusion)");
  check->add_option("game", c.game_path, "Game file")->required();

  auto* epistemic = app.add_subcommand("epistemic", "Epistemic model checks");
  epistemic->require_subcommand(1);
  auto* enumerate = epistemic->add_subcommand("enumerate", "Enumerate models for CK and CB");
  enumerate->add_option("--omega", c.omega, "Number of states")->required();
  enumerate->add_option("--prop", c.prop, "Property or profile");
  enumerate->add_option("--player", c.players, "Per-player property, e.g. 1=sd:g (repeatable)");
  enumerate->add_option("game", c.game_path, "Game file")->required();
  auto* witness = epistemic->add_subcommand("witness", "Build and check a witness model");
  witness->add_option("--theorem", c.theorem, "1 (monotone) or 2 (singleton)")->required();
  witness->add_option("--prop", c.prop, "Property or profile");
  witness->add_option("--player", c.players, "Per-player property, e.g. 1=sd:g (repeatable)");
  witness->add_option("--joint", c.joint, "Target joint strategy, e.g. C,D (theorem 2)");
  witness->add_option("game", c.game_path, "Game file")->required();

  auto* transfinite = app.add_subcommand("transfinite", "Symbolic transfinite iteration");
  transfinite->require_subcommand(1);
  auto* run = transfinite->add_subcommand("run", "Validate a witness and iterate it");
  run->add_option("--bound", c.bound, "Ordinal bound, e.g. 2w+5")->required();
  run->add_option("--samples", c.samples, "Probe points per piece");
  run->add_option("witness", c.witness, "Registered witness name")->required();
  auto* list = transfinite->add_subcommand("list", "List registered witnesses");

  auto* random = app.add_subcommand("random", "Write a seeded random bimatrix game");
  random->add_option("--seed", c.seed, "Seed");
  random->add_option("--rows", c.rows, "Row strategies");
  random->add_option("--cols", c.cols, "Column strategies");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (!c.players.empty()) {
      if (!c.prop.empty()) throw ArgumentError("use either --prop or --player, not both");
      for (const auto& p : c.players) c.prop += (c.prop.empty() ? "" : ",") + p;
    }
    if (eliminate->parsed()) return CmdEliminate(c, out);
    if (check->parsed()) return CmdCheck(c, out);
    if (enumerate->parsed()) return CmdEnumerate(c, out);
    if (witness->parsed()) return CmdWitness(c, out);
    if (run->parsed()) return CmdTransfiniteRun(c, out);
    if (list->parsed()) return CmdTransfiniteList(c, out);
    if (random->parsed()) return CmdRandom(c, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const UnsupportedConfiguration& e) {
    err << "unsupported configuration: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no command given\n";
  return kExitInputError;
}

}  // namespace epigame
