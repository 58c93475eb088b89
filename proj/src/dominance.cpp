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

#include "epigame/dominance.hpp"

#include <stdexcept>

#include "epigame/errors.hpp"
#include "epigame/lp.hpp"

namespace epigame {
namespace {

void CheckStrategy(const Game& game, PlayerIndex i, StrategyIndex s) {
  if (i >= game.num_players()) {
    throw ArgumentError("player " + std::to_string(i + 1) + " out of range");
  }
  if (s >= game.num_strategies(i)) {
    throw ArgumentError("strategy index " + std::to_string(s) +
                        " out of range for player " + std::to_string(i + 1));
  }
}

void CheckPool(const Game& game, PlayerIndex i, StrategySet pool) {
  if (!pool.IsSubsetOf(StrategySet::Full(game.num_strategies(i)))) {
    throw ArgumentError("strategy pool exceeds the strategies of player " +
                        std::to_string(i + 1));
  }
}

Rational PayoffAt(const Game& game, PlayerIndex i, StrategyIndex s,
                  JointStrategy profile) {
  profile[i] = s;
  return game.payoff(i, profile);
}

bool InContext(const Restriction& g, PlayerIndex i, const JointStrategy& p) {
  for (PlayerIndex j = 0; j < g.num_players(); ++j) {
    if (j != i && !g[j].contains(p.at(j))) return false;
  }
  return true;
}

bool IsDistribution(const std::vector<std::pair<JointStrategy, Rational>>& d) {
  Rational total = 0;
  for (const auto& [p, w] : d) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  return total == 1;
}

// Correlated belief over S_{-i} making `candidate` weakly optimal in `pool`,
// via LP feasibility.
std::optional<CorrelatedBelief> SolveCorrelatedBelief(
    const Game& game, const std::vector<JointStrategy>& profiles, StrategySet pool,
    PlayerIndex i, StrategyIndex candidate) {
  LinearProgram lp;
  lp.num_vars = profiles.size();
  lp.objective.assign(lp.num_vars, 0);
  for (auto alt : pool.members()) {
    if (alt == candidate) continue;
    LinearConstraint c;
    c.relation = Relation::kGreaterEqual;
    c.rhs = 0;
    c.coefficients.reserve(profiles.size());
    for (const auto& t : profiles) {
      c.coefficients.push_back(PayoffAt(game, i, candidate, t) -
                               PayoffAt(game, i, alt, t));
    }
    lp.constraints.push_back(std::move(c));
  }
  LinearConstraint sum;
  sum.relation = Relation::kEqual;
  sum.rhs = 1;
  sum.coefficients.assign(profiles.size(), 1);
  lp.constraints.push_back(std::move(sum));

  const auto sol = SolveLinearProgram(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  CorrelatedBelief belief;
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    if (sgn(sol.x[k]) > 0) belief.distribution.emplace_back(profiles[k], sol.x[k]);
  }
  return belief;
}

}  // namespace

bool MixedStrategy::IsValid(StrategySet support) const {
  Rational total = 0;
  for (const auto& [s, w] : weights) {
    if (sgn(w) < 0 || !support.contains(s)) return false;
    total += w;
  }
  return total == 1;
}

std::string ToString(BeliefKind kind) {
  switch (kind) {
    case BeliefKind::kPurePoint:
      return "pure-point";
    case BeliefKind::kCorrelated:
      return "correlated";
    case BeliefKind::kIndependentMixed:
      return "independent-mixed";
  }
  return "?";
}

BeliefKind KindOf(const Belief& belief) {
  if (std::holds_alternative<PointBelief>(belief)) return BeliefKind::kPurePoint;
  if (std::holds_alternative<CorrelatedBelief>(belief)) {
    return BeliefKind::kCorrelated;
  }
  return BeliefKind::kIndependentMixed;
}

bool StrictlyDominatesPure(const Game& game, const Restriction& context,
                           PlayerIndex i, StrategyIndex dominator,
                           StrategyIndex dominated) {
  CheckShape(game, context);
  CheckStrategy(game, i, dominator);
  CheckStrategy(game, i, dominated);
  bool all = true;
  JointStrategy joint(game.num_players(), 0);
  ForEachOpponentProfile(context, i, joint, [&](const JointStrategy& t) {
    if (!all) return;
    JointStrategy p = t;
    p[i] = dominator;
    const Rational& better = game.payoff(i, p);
    p[i] = dominated;
    if (!(better > game.payoff(i, p))) all = false;
  });
  return all;
}

bool MixtureStrictlyDominates(const Game& game, const Restriction& context,
                              PlayerIndex i, const MixedStrategy& m,
                              StrategyIndex dominated) {
  if (!m.IsValid(StrategySet::Full(game.num_strategies(i)))) return false;
  bool all = true;
  JointStrategy joint(game.num_players(), 0);
  ForEachOpponentProfile(context, i, joint, [&](const JointStrategy& t) {
    if (!all) return;
    Rational mixed = 0;
    for (const auto& [s, w] : m.weights) mixed += w * PayoffAt(game, i, s, t);
    if (!(mixed > PayoffAt(game, i, dominated, t))) all = false;
  });
  return all;
}

std::optional<MixedStrategy> MixedDominanceWitness(const Game& game,
                                                   const Restriction& context,
                                                   PlayerIndex i,
                                                   StrategySet pool,
                                                   StrategyIndex dominated) {
  CheckShape(game, context);
  CheckStrategy(game, i, dominated);
  CheckPool(game, i, pool);
  const auto members = pool.members();
  if (members.empty()) return std::nullopt;
  const auto profiles = OpponentProfiles(context, i);

  MixedStrategy witness;
  witness.owner = i;
  if (profiles.empty()) {
    // Vacuous dominance: every mixture qualifies.
    for (auto s : members) {
      witness.weights.emplace_back(s, Rational(1, members.size()));
    }
    return witness;
  }
  for (auto s : members) {
    if (StrictlyDominatesPure(game, context, i, s, dominated)) {
      witness.weights.emplace_back(s, 1);
      return witness;
    }
  }

  // maximize eps = e_plus - e_minus subject to
  //   sum_s m_s (p(s, t) - p(dominated, t)) - eps >= 0  for t in S_{-i}
  //   sum_s m_s = 1.
  const std::size_t k = members.size();
  LinearProgram lp;
  lp.num_vars = k + 2;
  lp.objective.assign(k + 2, 0);
  lp.objective[k] = 1;
  lp.objective[k + 1] = -1;
  for (const auto& t : profiles) {
    LinearConstraint c;
    c.relation = Relation::kGreaterEqual;
    c.rhs = 0;
    const Rational base = PayoffAt(game, i, dominated, t);
    for (auto s : members) c.coefficients.push_back(PayoffAt(game, i, s, t) - base);
    c.coefficients.push_back(-1);
    c.coefficients.push_back(1);
    lp.constraints.push_back(std::move(c));
  }
  LinearConstraint sum;
  sum.relation = Relation::kEqual;
  sum.rhs = 1;
  sum.coefficients.assign(k + 2, 1);
  sum.coefficients[k] = 0;
  sum.coefficients[k + 1] = 0;
  lp.constraints.push_back(std::move(sum));

  const auto sol = SolveLinearProgram(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw std::logic_error("mixed-dominance LP is always feasible and bounded");
  }
  if (sgn(sol.value) <= 0) return std::nullopt;
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(sol.x[j]) > 0) witness.weights.emplace_back(members[j], sol.x[j]);
  }
  if (!MixtureStrictlyDominates(game, context, i, witness, dominated)) {
    throw std::logic_error("LP produced an invalid dominance witness");
  }
  return witness;
}

Rational ExpectedPayoff(const Game& game, PlayerIndex i, StrategyIndex s,
                        const Belief& belief) {
  if (const auto* point = std::get_if<PointBelief>(&belief)) {
    return PayoffAt(game, i, s, point->profile);
  }
  if (const auto* corr = std::get_if<CorrelatedBelief>(&belief)) {
    Rational total = 0;
    for (const auto& [p, w] : corr->distribution) {
      total += w * PayoffAt(game, i, s, p);
    }
    return total;
  }
  const auto& ind = std::get<IndependentBelief>(belief);
  // Product measure over the opponents' supports.
  std::vector<PlayerIndex> opponents;
  for (PlayerIndex j = 0; j < game.num_players(); ++j) {
    if (j != i) opponents.push_back(j);
  }
  if (ind.marginals.size() != opponents.size()) {
    throw ArgumentError("independent belief needs one marginal per opponent");
  }
  Rational total = 0;
  JointStrategy joint(game.num_players(), 0);
  joint[i] = s;
  std::function<void(std::size_t, const Rational&)> rec =
      [&](std::size_t k, const Rational& weight) {
        if (k == opponents.size()) {
          total += weight * game.payoff(i, joint);
          return;
        }
        for (const auto& [t, w] : ind.marginals[k].weights) {
          joint[opponents[k]] = t;
          rec(k + 1, weight * w);
        }
      };
  rec(0, Rational(1));
  return total;
}

bool IsBestResponse(const Game& game, const Restriction& belief_context,
                    StrategySet pool, PlayerIndex i, StrategyIndex candidate,
                    const Belief& belief) {
  CheckShape(game, belief_context);
  CheckStrategy(game, i, candidate);
  CheckPool(game, i, pool);
  if (const auto* point = std::get_if<PointBelief>(&belief)) {
    if (point->profile.size() != game.num_players() ||
        !InContext(belief_context, i, point->profile)) {
      throw ArgumentError("point belief outside the belief context");
    }
  } else if (const auto* corr = std::get_if<CorrelatedBelief>(&belief)) {
    if (!IsDistribution(corr->distribution)) {
      throw ArgumentError("correlated belief is not a probability distribution");
    }
    for (const auto& [p, w] : corr->distribution) {
      if (p.size() != game.num_players() ||
          (sgn(w) > 0 && !InContext(belief_context, i, p))) {
        throw ArgumentError("correlated belief outside the belief context");
      }
    }
  } else {
    if (game.num_players() > 2) {
      throw UnsupportedConfiguration(
          "independent-mixed beliefs are only supported for two-player games");
    }
    const auto& ind = std::get<IndependentBelief>(belief);
    const PlayerIndex opp = 1 - i;
    if (ind.marginals.size() != 1 || ind.marginals[0].owner != opp ||
        !ind.marginals[0].IsValid(belief_context[opp])) {
      throw ArgumentError("independent belief outside the belief context");
    }
  }
  const Rational own = ExpectedPayoff(game, i, candidate, belief);
  for (auto alt : pool.members()) {
    if (ExpectedPayoff(game, i, alt, belief) > own) return false;
  }
  return true;
}

std::optional<Belief> ExistsSupportingBelief(const Game& game,
                                             const Restriction& belief_context,
                                             StrategySet pool, PlayerIndex i,
                                             StrategyIndex candidate,
                                             BeliefKind kind) {
  CheckShape(game, belief_context);
  CheckStrategy(game, i, candidate);
  CheckPool(game, i, pool);
  if (kind == BeliefKind::kIndependentMixed && game.num_players() > 2) {
    throw UnsupportedConfiguration(
        "independent-mixed beliefs are only supported for two-player games");
  }
  const auto profiles = OpponentProfiles(belief_context, i);
  if (profiles.empty()) return std::nullopt;

  // Point masses are beliefs of every kind; try them first.
  const auto alts = pool.members();
  std::optional<Belief> found;
  for (const auto& t : profiles) {
    const Rational own = PayoffAt(game, i, candidate, t);
    bool best = true;
    for (auto alt : alts) {
      if (PayoffAt(game, i, alt, t) > own) {
        best = false;
        break;
      }
    }
    if (best) {
      found = PointBelief{t};
      break;
    }
  }
  if (!found && kind != BeliefKind::kPurePoint) {
    if (auto corr = SolveCorrelatedBelief(game, profiles, pool, i, candidate)) {
      found = std::move(*corr);
    }
  }
  if (!found) return std::nullopt;

  // Re-express the witness in the requested kind.
  if (kind == BeliefKind::kCorrelated) {
    if (auto* point = std::get_if<PointBelief>(&*found)) {
      found = CorrelatedBelief{{{point->profile, Rational(1)}}};
    }
  } else if (kind == BeliefKind::kIndependentMixed) {
    const PlayerIndex opp = 1 - i;
    MixedStrategy marginal;
    marginal.owner = opp;
    if (auto* point = std::get_if<PointBelief>(&*found)) {
      marginal.weights.emplace_back(point->profile[opp], 1);
    } else {
      for (const auto& [p, w] : std::get<CorrelatedBelief>(*found).distribution) {
        marginal.weights.emplace_back(p[opp], w);
      }
    }
    found = IndependentBelief{{std::move(marginal)}};
  }
  if (!IsBestResponse(game, belief_context, pool, i, candidate, *found)) {
    throw std::logic_error("belief witness failed re-validation");
  }
  return found;
}

CheckReport PearceEquivalenceCheck(const Game& game, const Restriction& g) {
  CheckShape(game, g);
  CheckReport report;
  report.check = "pearce_equivalence";
  Restriction brc_image = Restriction::Empty(game);
  Restriction msd_image = Restriction::Empty(game);
  Json certificates = Json::array();
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    for (auto s : g[i].members()) {
      const auto belief =
          ExistsSupportingBelief(game, g, g[i], i, s, BeliefKind::kCorrelated);
      const auto mixture = MixedDominanceWitness(game, g, i, g[i], s);
      if (belief) brc_image[i].insert(s);
      if (!mixture) msd_image[i].insert(s);
      Json entry = {{"player", i + 1},
                    {"strategy", game.strategy_name(i, s)},
                    {"brc_verdict", belief ? "survives" : "eliminated"},
                    {"msd_verdict", mixture ? "eliminated" : "survives"}};
      if (belief) entry["belief"] = BeliefToJson(game, i, *belief);
      if (mixture) entry["dominating_mixture"] = MixedStrategyToJson(game, *mixture);
      if (belief.has_value() == mixture.has_value()) {
        report.Fail(entry);
      }
      certificates.push_back(std::move(entry));
    }
  }
  report.details["restriction"] = g.Names(game);
  report.details["brc_image"] = brc_image.Names(game);
  report.details["msd_image"] = msd_image.Names(game);
  report.details["certificates"] = std::move(certificates);
  return report;
}

Json MixedStrategyToJson(const Game& game, const MixedStrategy& m) {
  Json weights = Json::object();
  for (const auto& [s, w] : m.weights) {
    weights[game.strategy_name(m.owner, s)] = ToString(w);
  }
  return {{"player", m.owner + 1}, {"weights", std::move(weights)}};
}

Json BeliefToJson(const Game& game, PlayerIndex i, const Belief& belief) {
  auto profile_names = [&](const JointStrategy& p) {
    Json names = Json::array();
    for (PlayerIndex j = 0; j < game.num_players(); ++j) {
      if (j != i) names.push_back(game.strategy_name(j, p[j]));
    }
    return names;
  };
  Json j;
  j["kind"] = ToString(KindOf(belief));
  if (const auto* point = std::get_if<PointBelief>(&belief)) {
    j["profile"] = profile_names(point->profile);
  } else if (const auto* corr = std::get_if<CorrelatedBelief>(&belief)) {
    Json dist = Json::array();
    for (const auto& [p, w] : corr->distribution) {
      dist.push_back({{"profile", profile_names(p)}, {"weight", ToString(w)}});
    }
    j["distribution"] = std::move(dist);
  } else {
    Json marginals = Json::array();
    for (const auto& m : std::get<IndependentBelief>(belief).marginals) {
      marginals.push_back(MixedStrategyToJson(game, m));
    }
    j["marginals"] = std::move(marginals);
  }
  return j;
}

}  // namespace epigame
