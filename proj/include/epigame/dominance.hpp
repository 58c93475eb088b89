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

#ifndef EPIGAME_DOMINANCE_HPP_
#define EPIGAME_DOMINANCE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "epigame/game.hpp"
#include "epigame/rational.hpp"
#include "epigame/report.hpp"
#include "epigame/restriction.hpp"

namespace epigame {

// Probability distribution over a subset of one player's strategies.
struct MixedStrategy {
  PlayerIndex owner = 0;
  std::vector<std::pair<StrategyIndex, Rational>> weights;

  // Non-negative weights summing to exactly one, supported in `support`.
  bool IsValid(StrategySet support) const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
};

enum class BeliefKind { kPurePoint, kCorrelated, kIndependentMixed };

std::string ToString(BeliefKind kind);

// A single opponent profile s_{-i}; the believer's own slot is ignored.
struct PointBelief {
  JointStrategy profile;
};

// A distribution over opponent profiles in S_{-i}.
struct CorrelatedBelief {
  std::vector<std::pair<JointStrategy, Rational>> distribution;
};

// One mixed strategy per opponent, in player order with the believer skipped.
struct IndependentBelief {
  std::vector<MixedStrategy> marginals;
};

using Belief = std::variant<PointBelief, CorrelatedBelief, IndependentBelief>;

BeliefKind KindOf(const Belief& belief);

// s' strictly better than s against every profile of G's S_{-i}; vacuously
// true when S_{-i} is empty. Strategies range over T_i.
bool StrictlyDominatesPure(const Game& game, const Restriction& context,
                           PlayerIndex i, StrategyIndex dominator,
                           StrategyIndex dominated);

// Some mixture over `pool` strictly dominating `dominated` on the context,
// found with the max-epsilon LP and re-validated before it is returned.
std::optional<MixedStrategy> MixedDominanceWitness(const Game& game,
                                                   const Restriction& context,
                                                   PlayerIndex i,
                                                   StrategySet pool,
                                                   StrategyIndex dominated);

// Direct check of m >_G s by exact evaluation.
bool MixtureStrictlyDominates(const Game& game, const Restriction& context,
                              PlayerIndex i, const MixedStrategy& m,
                              StrategyIndex dominated);

// Expected payoff of player i's strategy s under the belief.
Rational ExpectedPayoff(const Game& game, PlayerIndex i, StrategyIndex s,
                        const Belief& belief);

// s is weakly optimal within `pool` against the belief. The belief must be
// supported in G's S_{-i}. Independent beliefs with more than two players are
// rejected with UnsupportedConfiguration.
bool IsBestResponse(const Game& game, const Restriction& belief_context,
                    StrategySet pool, PlayerIndex i, StrategyIndex candidate,
                    const Belief& belief);

// A belief held in G to which `candidate` is a best response in `pool`.
// Pure-point beliefs are searched exhaustively; correlated ones by exact LP
// feasibility. Independent beliefs follow the correlated path for two players.
std::optional<Belief> ExistsSupportingBelief(const Game& game,
                                             const Restriction& belief_context,
                                             StrategySet pool, PlayerIndex i,
                                             StrategyIndex candidate,
                                             BeliefKind kind);

// Compares the local correlated best-response image of g with the local
// mixed-dominance image, strategy by strategy, with both LP certificates.
CheckReport PearceEquivalenceCheck(const Game& game, const Restriction& g);

Json MixedStrategyToJson(const Game& game, const MixedStrategy& m);
Json BeliefToJson(const Game& game, PlayerIndex i, const Belief& belief);

}  // namespace epigame

#endif  // EPIGAME_DOMINANCE_HPP_
