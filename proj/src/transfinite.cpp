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

#include "epigame/transfinite.hpp"

#include <memory>
#include <utility>

#include "epigame/errors.hpp"
#include "epigame/fixtures.hpp"

namespace epigame {
namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);

std::string PointString(const std::optional<Rational>& x) {
  return x ? epigame::ToString(*x) : std::string("?");
}

Json RestrictionStrings(const SymbolicRestriction& r) {
  Json out = Json::array();
  for (const auto& s : r) out.push_back(s.ToString());
  return out;
}

Rational Half(const Rational& x) {
  Rational h = x / 2;
  h.canonicalize();
  return h;
}

// Both players' payoffs in the witness are minus a squared distance to a
// target, except against or at the isolated strategy 2.
Rational WitnessPayoff(PlayerIndex i, const Rational& own, const Rational& other) {
  if (i == 0) {
    const Rational target = other == kTwo ? kZero : Half(other);
    Rational d = own - target;
    return Rational(-(d * d));
  }
  if (own == kTwo) return other > 0 ? Rational(0) : Rational(-1);
  Rational d = own - Half(other);
  return Rational(-(d * d));
}

SymbolicRestriction WitnessStep(const SymbolicRestriction& g) {
  const SymbolicSet& s1 = g[0];
  const SymbolicSet& s2 = g[1];
  const SymbolicSet y = s2.Intersect(SymbolicSet::Closed(kZero, kOne));
  const bool two = s2.Contains(kTwo);
  SymbolicRestriction out(2);
  if (s2.empty()) {
    out[0] = SymbolicSet();
  } else if (y.empty()) {
    out[0] = s1.Intersect(SymbolicSet::Point(kZero));
  } else {
    const Rational hi = Half(y.Supremum().value);
    const Rational lo = two ? kZero : Half(y.Infimum().value);
    out[0] = s1.Intersect(SymbolicSet::Closed(lo, hi));
  }
  const SymbolicSet& x = s1;
  if (x.empty()) {
    out[1] = SymbolicSet();
  } else {
    const bool positive = !x.Intersect(SymbolicSet::AtLeast(kZero, false)).empty();
    SymbolicSet kept = x.Contains(kZero)
                           ? s2.Intersect(SymbolicSet::Closed(kZero, Half(x.Supremum().value)))
                           : s2.Intersect(x.Scale(Rational(1, 2)));
    kept = kept.Intersect(SymbolicSet::Closed(kZero, kOne));
    if (two && positive) kept = kept.Union(SymbolicSet::Point(kTwo));
    out[1] = kept;
  }
  return out;
}

std::optional<SymbolicRestriction> WitnessLimit(const SymbolicRestriction& g) {
  if (!g[0].Contains(kZero) || !g[1].Contains(kZero)) {
    throw ValidationError("limit rule of witness-tg needs 0 in both sets, got " +
                          ToString(g));
  }
  const SymbolicSet y = g[1].Intersect(SymbolicSet::Closed(kZero, kOne));
  if (!g[0].AccumulatesFromRightAt(kZero) || !y.AccumulatesFromRightAt(kZero)) {
    return std::nullopt;
  }
  SymbolicRestriction out{SymbolicSet::Point(kZero), SymbolicSet::Point(kZero)};
  if (g[1].Contains(kTwo)) out[1] = SymbolicSet::Points({kZero, kTwo});
  return out;
}

Rational WitnessDominator(PlayerIndex i, const Rational& x,
                         const SymbolicRestriction& g) {
  if (i == 0) {
    const SymbolicSet y = g[1].Intersect(SymbolicSet::Closed(kZero, kOne));
    if (g[1].empty()) return x;
    if (y.empty()) return kZero;
    const Rational hi = Half(y.Supremum().value);
    const Rational lo = g[1].Contains(kTwo) ? kZero : Half(y.Infimum().value);
    if (x > hi) return hi;
    if (x < lo) return lo;
    return x;
  }
  if (g[0].empty()) return x;
  if (x == kTwo) return kZero;
  if (g[0].Contains(kZero)) return Half(g[0].Supremum().value);
  return kTwo;
}

std::optional<Rational> WitnessRefuter(PlayerIndex i, const Rational& x,
                                       const Rational& alt,
                                       const SymbolicRestriction& g) {
  const SymbolicSet& others = g[1 - i];
  if (alt == x) return others.AnyPoint();
  if (i == 0) {
    const Rational mid = Half(x + alt);
    const SymbolicSet y = others.Intersect(SymbolicSet::Closed(kZero, kOne));
    if (alt > x) {
      if (others.Contains(kTwo) && mid >= 0) return kTwo;
      return y.Intersect(SymbolicSet::AtMost(Rational(2 * mid))).AnyPoint();
    }
    if (others.Contains(kTwo) && mid <= 0) return kTwo;
    return y.Intersect(SymbolicSet::AtLeast(Rational(2 * mid))).AnyPoint();
  }
  if (x == kTwo) {
    return others.Intersect(SymbolicSet::AtLeast(kZero, false)).AnyPoint();
  }
  if (alt == kTwo) {
    if (others.Contains(kZero)) return kZero;
    if (others.Contains(Rational(2 * x))) return Rational(2 * x);
    return std::nullopt;
  }
  const Rational mid = Half(x + alt);
  if (alt > x) return others.Intersect(SymbolicSet::AtMost(Rational(2 * mid))).AnyPoint();
  return others.Intersect(SymbolicSet::AtLeast(Rational(2 * mid))).AnyPoint();
}

SymbolicGame MakeWitnessTG() {
  SymbolicGame g;
  g.name = "witness-tg";
  g.encodes = "sd:g";
  g.strategy_space = {SymbolicSet::Closed(kZero, kOne),
                      SymbolicSet::Closed(kZero, kOne).Union(SymbolicSet::Point(kTwo))};
  g.initial = g.strategy_space;
  g.step = WitnessStep;
  g.limit = WitnessLimit;
  g.claims_transfinite = true;
  g.payoff = WitnessPayoff;
  g.dominator = WitnessDominator;
  g.refuter = WitnessRefuter;
  return g;
}

}  // namespace

std::string ToString(SymbolicStatus status) {
  return status == SymbolicStatus::kFixpoint ? "fixpoint" : "unresolved_at_bound";
}

const SymbolicRestriction* SymbolicTrace::At(const Ordinal& o) const {
  for (const auto& s : steps) {
    if (s.ordinal == o) return &s.restriction;
  }
  return nullptr;
}

SymbolicTrace IterateSymbolic(const SymbolicGame& game, const Ordinal& bound,
                              std::uint64_t omega_cap, std::size_t max_block_steps) {
  if (bound.omega > omega_cap) {
    throw ArgumentError("bound " + ToString(bound) + " exceeds the ordinal cap " +
                        ToString(Ordinal::OmegaTimes(omega_cap)) + "+b");
  }
  const std::size_t n = game.initial.size();
  SymbolicTrace trace;
  trace.bound = bound;
  SymbolicRestriction current = game.initial;
  Ordinal ordinal;
  trace.steps.push_back({ordinal, current});
  std::size_t block_start = 0;
  std::size_t in_block = 0;

  while (true) {
    if (bound < ordinal.Successor()) {
      trace.status = SymbolicStatus::kUnresolvedAtBound;
      trace.outcome = std::move(current);
      return trace;
    }
    SymbolicRestriction next = game.step(current);
    if (next.size() != n) throw ValidationError("step changed the number of players");
    for (PlayerIndex i = 0; i < n; ++i) {
      if (!next[i].IsSubsetOf(current[i])) {
        const std::string point = PointString(next[i].Difference(current[i]).AnyPoint());
        throw SymbolicValidationError(
            "not_contracting", i, point,
            "step is not contracting at " + ToString(ordinal) + ": player " +
                std::to_string(i + 1) + " gains point " + point);
      }
    }
    if (next == current) {
      trace.status = SymbolicStatus::kFixpoint;
      trace.closure_ordinal = ordinal;
      trace.outcome = std::move(current);
      return trace;
    }
    ordinal = ordinal.Successor();
    trace.steps.push_back({ordinal, next});
    current = std::move(next);
    ++in_block;
    if (in_block > max_block_steps) {
      throw BudgetError("no limit or fixpoint after " +
                        std::to_string(max_block_steps) + " steps past " +
                        ToString(trace.steps[block_start].ordinal));
    }
    if (in_block % game.block_cap != 0 || !game.limit) continue;
    const Ordinal limit_ordinal = Ordinal::OmegaTimes(ordinal.omega + 1);
    if (bound < limit_ordinal) continue;
    auto lim = game.limit(current);
    if (!lim) continue;
    if (lim->size() != n) throw ValidationError("limit changed the number of players");
    for (std::size_t k = block_start; k < trace.steps.size(); ++k) {
      for (PlayerIndex i = 0; i < n; ++i) {
        const auto& iterate = trace.steps[k].restriction[i];
        if (!(*lim)[i].IsSubsetOf(iterate)) {
          const std::string point = PointString((*lim)[i].Difference(iterate).AnyPoint());
          throw SymbolicValidationError(
              "limit_not_contained", i, point,
              "limit at " + ToString(limit_ordinal) + " is not contained in the " +
                  "iterate at " + ToString(trace.steps[k].ordinal) + ": player " +
                  std::to_string(i + 1) + " keeps point " + point);
        }
      }
    }
    ordinal = limit_ordinal;
    trace.steps.push_back({ordinal, *lim});
    current = std::move(*lim);
    block_start = trace.steps.size() - 1;
    in_block = 0;
  }
}

CheckReport ValidateWitness(const SymbolicGame& game, std::size_t samples) {
  CheckReport report;
  report.check = "validate_witness";
  report.details["witness"] = game.name;
  report.details["encodes"] = game.encodes;
  report.details["samples"] = samples;

  SymbolicTrace trace;
  try {
    trace = IterateSymbolic(game, Ordinal{kDefaultOmegaCap, 10'000});
  } catch (const SymbolicValidationError& e) {
    report.Fail({{"kind", e.kind()},
                 {"player", e.player() + 1},
                 {"point", e.point()},
                 {"message", e.what()}});
    return report;
  } catch (const ValidationError& e) {
    report.Fail({{"kind", "engine_validation"}, {"message", e.what()}});
    return report;
  } catch (const BudgetError& e) {
    report.Fail({{"kind", "unresolved"}, {"message", e.what()}});
    return report;
  }
  if (trace.status != SymbolicStatus::kFixpoint) {
    report.Fail({{"kind", "unresolved"}, {"bound", ToString(trace.bound)}});
    return report;
  }
  const std::size_t n = game.initial.size();
  std::size_t probes = 0;
  std::size_t certificates = 0;
  std::size_t limit_steps = 0;

  for (std::size_t k = 1; k < trace.steps.size(); ++k) {
    const auto& prev = trace.steps[k - 1];
    const auto& cur = trace.steps[k];
    if (cur.ordinal.IsLimit()) {
      ++limit_steps;
      for (std::size_t j = 0; j < k; ++j) {
        for (PlayerIndex i = 0; i < n; ++i) {
          for (const auto& x : cur.restriction[i].ProbePoints(samples)) {
            ++probes;
            if (!trace.steps[j].restriction[i].Contains(x)) {
              report.Fail({{"kind", "limit_not_contained"},
                           {"limit", ToString(cur.ordinal)},
                           {"iterate", ToString(trace.steps[j].ordinal)},
                           {"player", i + 1},
                           {"point", epigame::ToString(x)}});
            }
          }
        }
      }
      continue;
    }
    for (PlayerIndex i = 0; i < n; ++i) {
      for (const auto& x : cur.restriction[i].ProbePoints(samples)) {
        ++probes;
        if (!prev.restriction[i].Contains(x)) {
          report.Fail({{"kind", "step_not_contracting"},
                       {"ordinal", ToString(cur.ordinal)},
                       {"player", i + 1},
                       {"point", epigame::ToString(x)}});
        }
      }
    }
    if (!game.payoff || n != 2) continue;
    for (PlayerIndex i = 0; i < 2; ++i) {
      const auto opponent_probes = prev.restriction[1 - i].ProbePoints(samples);
      const auto removed = prev.restriction[i].Difference(cur.restriction[i]);
      for (const auto& x : removed.ProbePoints(samples)) {
        const Rational d = game.dominator(i, x, prev.restriction);
        ++certificates;
        bool ok = game.strategy_space[i].Contains(d);
        for (const auto& z : opponent_probes) {
          ok = ok && game.payoff(i, d, z) > game.payoff(i, x, z);
        }
        if (!ok) {
          report.Fail({{"kind", "dominator_certificate"},
                       {"ordinal", ToString(cur.ordinal)},
                       {"player", i + 1},
                       {"point", epigame::ToString(x)},
                       {"dominator", epigame::ToString(d)}});
        }
      }
      const auto alternatives = game.strategy_space[i].ProbePoints(std::min<std::size_t>(samples, 12));
      for (const auto& x : cur.restriction[i].ProbePoints(samples)) {
        for (const auto& alt : alternatives) {
          ++certificates;
          const auto z = game.refuter(i, x, alt, prev.restriction);
          if (!z || !prev.restriction[1 - i].Contains(*z) ||
              game.payoff(i, alt, *z) > game.payoff(i, x, *z)) {
            report.Fail({{"kind", "survivor_certificate"},
                         {"ordinal", ToString(cur.ordinal)},
                         {"player", i + 1},
                         {"point", epigame::ToString(x)},
                         {"alternative", epigame::ToString(alt)}});
          }
        }
      }
    }
  }

  report.details["status"] = ToString(trace.status);
  report.details["closure_ordinal"] = ToString(*trace.closure_ordinal);
  report.details["limit_steps"] = limit_steps;
  report.details["probe_points"] = probes;
  report.details["certificates"] = certificates;
  const auto* at_omega = trace.At(Ordinal::OmegaTimes(1));
  const auto* after_omega = trace.At(Ordinal{1, 1});
  const bool differs = at_omega && after_omega && *at_omega != *after_omega;
  report.details["omega_differs_from_successor"] = differs;
  if (game.claims_transfinite) {
    if (!differs) report.Fail({{"kind", "omega_is_fixpoint_or_missing"}});
    if (trace.closure_ordinal->omega == 0) {
      report.Fail({{"kind", "closure_not_beyond_omega"},
                   {"closure_ordinal", ToString(*trace.closure_ordinal)}});
    }
  }
  if (report.findings.size() > 100) report.findings.resize(100);
  return report;
}

SymbolicGame LiftFiniteGame(const Game& game, const PropertyProfile& profile) {
  const auto op = std::make_shared<Operator>(MakeOperator(profile, game));
  const auto owned = std::make_shared<const Game>(game);
  SymbolicGame out;
  out.name = "embedded-finite-" + game.name();
  out.encodes = profile.ToString();
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    std::vector<Rational> points;
    for (StrategyIndex s = 0; s < game.num_strategies(i); ++s) {
      points.emplace_back(static_cast<long>(s));
    }
    out.initial.push_back(SymbolicSet::Points(points));
  }
  out.strategy_space = out.initial;
  out.step = [op, owned](const SymbolicRestriction& g) {
    const Restriction image = (*op)(LowerRestriction(*owned, g));
    SymbolicRestriction lifted;
    for (PlayerIndex i = 0; i < owned->num_players(); ++i) {
      std::vector<Rational> points;
      for (auto s : image[i].members()) points.emplace_back(static_cast<long>(s));
      lifted.push_back(SymbolicSet::Points(points));
    }
    return lifted;
  };
  // Chains of finite sets always stabilize.
  out.limit = [](const SymbolicRestriction&) {
    return std::optional<SymbolicRestriction>();
  };
  return out;
}

Restriction LowerRestriction(const Game& game, const SymbolicRestriction& r) {
  if (r.size() != game.num_players()) {
    throw ArgumentError("symbolic restriction has the wrong number of players");
  }
  Restriction out = Restriction::Empty(game);
  for (PlayerIndex i = 0; i < r.size(); ++i) {
    for (StrategyIndex s = 0; s < game.num_strategies(i); ++s) {
      if (r[i].Contains(Rational(static_cast<long>(s)))) out[i].insert(s);
    }
    const auto back = SymbolicSet::Points([&] {
      std::vector<Rational> pts;
      for (auto s : out[i].members()) pts.emplace_back(static_cast<long>(s));
      return pts;
    }());
    if (back != r[i]) {
      throw ArgumentError("set " + r[i].ToString() +
                          " is not a set of strategy indices");
    }
  }
  return out;
}

IterationTrace LowerTrace(const Game& game, const SymbolicTrace& trace) {
  if (trace.status != SymbolicStatus::kFixpoint) {
    throw ArgumentError("only traces that reached a fixpoint can be lowered");
  }
  IterationTrace out;
  for (const auto& s : trace.steps) {
    out.steps.push_back({s.ordinal, LowerRestriction(game, s.restriction)});
  }
  out.closure_ordinal = *trace.closure_ordinal;
  out.outcome = LowerRestriction(game, trace.outcome);
  return out;
}

SymbolicGame WitnessTG() { return MakeWitnessTG(); }

SymbolicGame BrokenLimitWitness() {
  SymbolicGame g = MakeWitnessTG();
  g.name = "broken-limit";
  g.limit = [](const SymbolicRestriction& r) -> std::optional<SymbolicRestriction> {
    auto lim = WitnessLimit(r);
    if (lim) (*lim)[0] = (*lim)[0].Union(SymbolicSet::Point(Rational(1, 2)));
    return lim;
  };
  return g;
}

SymbolicGame IdentityWitness() {
  SymbolicGame g;
  g.name = "identity";
  g.encodes = "none";
  g.initial = {SymbolicSet::Closed(kZero, kOne), SymbolicSet::Closed(kZero, kOne)};
  g.strategy_space = g.initial;
  g.step = [](const SymbolicRestriction& r) { return r; };
  g.limit = [](const SymbolicRestriction&) {
    return std::optional<SymbolicRestriction>();
  };
  return g;
}

std::vector<std::string> WitnessNames() {
  return {"witness-tg",         "broken-limit",        "identity",
          "embedded-finite-pd", "embedded-finite-mp",  "embedded-finite-mix",
          "embedded-finite-chain"};
}

SymbolicGame FindWitness(const std::string& name) {
  if (name == "witness-tg") return WitnessTG();
  if (name == "broken-limit") return BrokenLimitWitness();
  if (name == "identity") return IdentityWitness();
  const std::string prefix = "embedded-finite-";
  if (name.starts_with(prefix)) {
    for (const auto& g : AllFixtures()) {
      if (prefix + g.name() == name) {
        return LiftFiniteGame(
            g, PropertyProfile::Uniform(PropertySpec::Parse("sd:g"), g.num_players()));
      }
    }
  }
  throw ArgumentError("unknown witness '" + name + "'");
}

Json SymbolicTraceToJson(const SymbolicGame& game, const SymbolicTrace& trace) {
  Json j = Json::object();
  j["witness"] = game.name;
  j["encodes"] = game.encodes;
  j["bound"] = ToString(trace.bound);
  j["status"] = ToString(trace.status);
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"ordinal", ToString(s.ordinal)},
                     {"restriction", RestrictionStrings(s.restriction)}});
  }
  j["steps"] = steps;
  j["closure_ordinal"] =
      trace.closure_ordinal ? Json(ToString(*trace.closure_ordinal)) : Json(nullptr);
  j["outcome"] = RestrictionStrings(trace.outcome);
  return j;
}

SymbolicTrace SymbolicTraceFromJson(const Json& j) {
  auto ordinal = [](const Json& v) {
    auto o = ParseOrdinal(v.get<std::string>());
    if (!o) throw ArgumentError("malformed ordinal '" + v.get<std::string>() + "'");
    return *o;
  };
  auto restriction = [](const Json& v) {
    SymbolicRestriction r;
    for (const auto& s : v) r.push_back(ParseSymbolicSet(s.get<std::string>()));
    return r;
  };
  try {
    SymbolicTrace t;
    t.bound = ordinal(j.at("bound"));
    const auto status = j.at("status").get<std::string>();
    if (status == "fixpoint") {
      t.status = SymbolicStatus::kFixpoint;
    } else if (status == "unresolved_at_bound") {
      t.status = SymbolicStatus::kUnresolvedAtBound;
    } else {
      throw ArgumentError("unknown status '" + status + "'");
    }
    for (const auto& s : j.at("steps")) {
      t.steps.push_back({ordinal(s.at("ordinal")), restriction(s.at("restriction"))});
    }
    if (!j.at("closure_ordinal").is_null()) t.closure_ordinal = ordinal(j.at("closure_ordinal"));
    t.outcome = restriction(j.at("outcome"));
    return t;
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed symbolic trace: ") + e.what());
  }
}

}  // namespace epigame
