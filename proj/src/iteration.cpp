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

#include "epigame/iteration.hpp"

#include "epigame/errors.hpp"

namespace epigame {
namespace {

bool KeyLeq(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

std::size_t DefaultBudget(const Game& game, std::size_t budget) {
  return budget != 0 ? budget : 10 * game.total_strategies();
}

}  // namespace

Operator IdentityOperator() {
  return {"identity", [](const Restriction& g) { return g; }};
}

Operator ConstantOperator(Restriction value, std::string name) {
  return {std::move(name),
          [value = std::move(value)](const Restriction&) { return value; }};
}

IterationTrace IterateOperator(const Operator& op, const Game& game,
                               std::size_t budget) {
  const std::size_t limit = DefaultBudget(game, budget);
  IterationTrace trace;
  Restriction current = RestrictionTop(game);
  trace.steps.push_back({Ordinal::Finite(0), current});
  for (std::size_t k = 0;; ++k) {
    if (k >= limit) {
      throw BudgetError("operator '" + op.name + "' did not stabilize within " +
                        std::to_string(limit) + " steps");
    }
    Restriction next = op(current);
    CheckShape(game, next);
    if (next == current) {
      trace.closure_ordinal = Ordinal::Finite(k);
      trace.outcome = std::move(current);
      return trace;
    }
    trace.steps.push_back({Ordinal::Finite(k + 1), next});
    current = std::move(next);
  }
}

bool IsFixpoint(const Operator& op, const Restriction& g) { return op(g) == g; }

bool IsPostFixpoint(const Operator& op, const Restriction& g) {
  return LatticeLeq(g, op(g));
}

OperatorTable::OperatorTable(const Operator& op, const Game& game,
                             std::size_t max_bits)
    : lattice_(game, max_bits) {
  images_.resize(lattice_.size());
  for (std::uint64_t key = 0; key < lattice_.size(); ++key) {
    Restriction img = op(lattice_.Decode(key));
    CheckShape(game, img);
    images_[key] = lattice_.Encode(img);
  }
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
OperatorTable::FindMonotonicityViolation() const {
  // Inclusion is transitive, so checking each G against G plus one strategy
  // covers every pair G <= G'.
  const std::uint64_t bits = lattice_.bits();
  for (std::uint64_t key = 0; key < images_.size(); ++key) {
    for (std::uint64_t b = 0; b < bits; ++b) {
      const std::uint64_t bigger = key | (std::uint64_t{1} << b);
      if (bigger == key) continue;
      if (!KeyLeq(images_[key], images_[bigger])) {
        return std::make_pair(key, bigger);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> OperatorTable::FindContractionViolation() const {
  for (std::uint64_t key = 0; key < images_.size(); ++key) {
    if (!KeyLeq(images_[key], key)) return key;
  }
  return std::nullopt;
}

Operator TabulatedOperator(const OperatorTable& table, std::string name) {
  return {std::move(name), [&table](const Restriction& g) {
            const auto& lat = table.lattice();
            return lat.Decode(table.image(lat.Encode(g)));
          }};
}

CheckReport VerifyTarski(const Operator& op, const Game& game,
                         const Budget& budget) {
  CheckReport report;
  report.check = "tarski";
  report.details["operator"] = op.name;
  const OperatorTable table(op, game, budget.lattice_bits);
  const auto& lat = table.lattice();
  report.details["lattice_size"] = table.size();

  if (auto v = table.FindMonotonicityViolation()) {
    report.PreconditionViolated(
        {{"kind", "not_monotonic"},
         {"smaller", RestrictionToJson(game, lat.Decode(v->first))},
         {"larger", RestrictionToJson(game, lat.Decode(v->second))},
         {"image_of_smaller",
          RestrictionToJson(game, lat.Decode(table.image(v->first)))},
         {"image_of_larger",
          RestrictionToJson(game, lat.Decode(table.image(v->second)))}});
    return report;
  }

  const auto trace =
      IterateOperator(TabulatedOperator(table, op.name), game,
                      budget.iteration_steps);
  const std::uint64_t outcome = lat.Encode(trace.outcome);

  std::uint64_t fix_join = 0;
  std::uint64_t post_join = 0;
  std::uint64_t fixpoints = 0;
  std::uint64_t post_fixpoints = 0;
  for (std::uint64_t key = 0; key < table.size(); ++key) {
    const std::uint64_t img = table.image(key);
    if (img == key) {
      ++fixpoints;
      fix_join |= key;
    }
    if (KeyLeq(key, img)) {
      ++post_fixpoints;
      post_join |= key;
    }
  }
  // The join of all fixpoints is the largest one only if it is itself fixed.
  const bool largest_exists = table.image(fix_join) == fix_join;

  report.details["closure_ordinal"] = ToString(trace.closure_ordinal);
  report.details["outcome"] = RestrictionToJson(game, trace.outcome);
  report.details["largest_fixpoint"] =
      largest_exists ? RestrictionToJson(game, lat.Decode(fix_join)) : Json();
  report.details["post_fixpoint_join"] =
      RestrictionToJson(game, lat.Decode(post_join));
  report.details["fixpoints"] = fixpoints;
  report.details["post_fixpoints"] = post_fixpoints;

  if (!largest_exists) {
    report.Fail({{"kind", "no_largest_fixpoint"}});
  } else if (outcome != fix_join) {
    report.Fail({{"kind", "outcome_differs_from_largest_fixpoint"}});
  }
  if (outcome != post_join) {
    report.Fail({{"kind", "outcome_differs_from_post_fixpoint_join"}});
  }
  return report;
}

CheckReport VerifyContractingOutcome(const Operator& op, const Game& game,
                                     const Budget& budget) {
  CheckReport report;
  report.check = "contracting_outcome";
  report.details["operator"] = op.name;

  // Contraction is required on every restriction the iteration visits; the
  // lattice-wide status is reported but does not decide the verdict.
  try {
    const OperatorTable table(op, game, budget.lattice_bits);
    const auto key = table.FindContractionViolation();
    report.details["contracting_on_lattice"] = !key.has_value();
    if (key) {
      report.details["lattice_witness"] =
          RestrictionToJson(game, table.lattice().Decode(*key));
    }
  } catch (const BudgetError&) {
    report.details["contracting_on_lattice"] = nullptr;
  }

  IterationTrace trace;
  try {
    trace = IterateOperator(op, game, budget.iteration_steps);
  } catch (const BudgetError& e) {
    report.Fail({{"kind", "did_not_terminate"}, {"message", e.what()}});
    return report;
  }
  for (const auto& step : trace.steps) {
    const Restriction image = op(step.restriction);
    if (!LatticeLeq(image, step.restriction)) {
      report.Fail({{"kind", "not_contracting"},
                   {"restriction", RestrictionToJson(game, step.restriction)},
                   {"image", RestrictionToJson(game, image)}});
      return report;
    }
  }

  for (std::size_t k = 1; k < trace.steps.size(); ++k) {
    const auto& prev = trace.steps[k - 1].restriction;
    const auto& cur = trace.steps[k].restriction;
    if (!LatticeLeq(cur, prev) || cur == prev) {
      report.Fail({{"kind", "trace_not_strictly_decreasing"},
                   {"ordinal", ToString(trace.steps[k].ordinal)},
                   {"restriction", RestrictionToJson(game, cur)}});
    }
  }
  if (!IsFixpoint(op, trace.outcome)) {
    report.Fail({{"kind", "outcome_not_fixpoint"}});
  }
  const std::size_t bound = game.total_strategies();
  if (trace.closure_ordinal.omega != 0 || trace.closure_ordinal.finite > bound) {
    report.Fail({{"kind", "closure_ordinal_too_large"},
                 {"closure_ordinal", ToString(trace.closure_ordinal)},
                 {"bound", bound}});
  }
  report.details["closure_ordinal"] = ToString(trace.closure_ordinal);
  report.details["closure_bound"] = bound;
  report.details["outcome"] = RestrictionToJson(game, trace.outcome);
  return report;
}

CheckReport VerifyInclusionLemma(const Operator& op1, const Operator& op2,
                                 const Game& game, const Budget& budget) {
  const OperatorTable t1(op1, game, budget.lattice_bits);
  const OperatorTable t2(op2, game, budget.lattice_bits);
  return VerifyInclusionLemma(t1, op1.name, t2, op2.name, game, budget);
}

CheckReport VerifyInclusionLemma(const OperatorTable& t1, const std::string& name1,
                                 const OperatorTable& t2, const std::string& name2,
                                 const Game& game, const Budget& budget) {
  CheckReport report;
  report.check = "inclusion_lemma";
  report.details["operator1"] = name1;
  report.details["operator2"] = name2;
  const auto& lat = t1.lattice();

  bool pointwise = true;
  for (std::uint64_t key = 0; key < t1.size(); ++key) {
    if (!KeyLeq(t1.image(key), t2.image(key))) {
      pointwise = false;
      report.PreconditionViolated(
          {{"kind", "pointwise_inclusion_fails"},
           {"restriction", RestrictionToJson(game, lat.Decode(key))}});
      break;
    }
  }
  const auto mono = t1.FindMonotonicityViolation();
  if (mono) {
    report.PreconditionViolated(
        {{"kind", "operator1_not_monotonic"},
         {"smaller", RestrictionToJson(game, lat.Decode(mono->first))},
         {"larger", RestrictionToJson(game, lat.Decode(mono->second))}});
  }
  const auto contr = t2.FindContractionViolation();
  if (contr) {
    report.PreconditionViolated(
        {{"kind", "operator2_not_contracting"},
         {"restriction", RestrictionToJson(game, lat.Decode(*contr))}});
  }
  report.details["hypotheses"] = {{"pointwise_inclusion", pointwise},
                                  {"operator1_monotonic", !mono.has_value()},
                                  {"operator2_contracting", !contr.has_value()}};

  const auto a = IterateOperator(TabulatedOperator(t1, name1), game,
                                 budget.iteration_steps);
  const auto b = IterateOperator(TabulatedOperator(t2, name2), game,
                                 budget.iteration_steps);
  const bool conclusion = LatticeLeq(a.outcome, b.outcome);
  bool stagewise = true;
  const std::size_t stages = std::max(a.steps.size(), b.steps.size());
  for (std::size_t k = 0; k < stages; ++k) {
    const auto& x = k < a.steps.size() ? a.steps[k].restriction : a.outcome;
    const auto& y = k < b.steps.size() ? b.steps[k].restriction : b.outcome;
    if (!LatticeLeq(x, y)) {
      stagewise = false;
      break;
    }
  }
  report.details["outcome1"] = RestrictionToJson(game, a.outcome);
  report.details["outcome2"] = RestrictionToJson(game, b.outcome);
  report.details["conclusion"] = conclusion;
  report.details["stagewise_inclusion"] = stagewise;

  const bool hypotheses = pointwise && !mono && !contr;
  if (hypotheses && !conclusion) {
    report.Fail({{"kind", "conclusion_fails"}});
  }
  if (hypotheses && !stagewise) {
    report.Fail({{"kind", "stagewise_inclusion_fails"}});
  }
  return report;
}

Json RestrictionToJson(const Game& game, const Restriction& r) {
  return r.Names(game);
}

Restriction RestrictionFromJson(const Game& game, const Json& j) {
  return Restriction::FromNames(
      game, j.get<std::vector<std::vector<std::string>>>());
}

Json TraceToJson(const Game& game, const IterationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"ordinal", ToString(s.ordinal)},
                     {"restriction", RestrictionToJson(game, s.restriction)}});
  }
  Json j;
  j["steps"] = std::move(steps);
  j["closure_ordinal"] = ToString(trace.closure_ordinal);
  j["outcome"] = RestrictionToJson(game, trace.outcome);
  return j;
}

IterationTrace TraceFromJson(const Game& game, const Json& j) {
  IterationTrace trace;
  for (const auto& s : j.at("steps")) {
    auto ord = ParseOrdinal(s.at("ordinal").get<std::string>());
    if (!ord) throw ArgumentError("bad ordinal in trace");
    trace.steps.push_back({*ord, RestrictionFromJson(game, s.at("restriction"))});
  }
  auto closure = ParseOrdinal(j.at("closure_ordinal").get<std::string>());
  if (!closure) throw ArgumentError("bad closure ordinal in trace");
  trace.closure_ordinal = *closure;
  trace.outcome = RestrictionFromJson(game, j.at("outcome"));
  return trace;
}

}  // namespace epigame
