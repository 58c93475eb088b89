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

#ifndef EPIGAME_TRANSFINITE_HPP_
#define EPIGAME_TRANSFINITE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epigame/errors.hpp"
#include "epigame/game.hpp"
#include "epigame/iteration.hpp"
#include "epigame/ordinal.hpp"
#include "epigame/property.hpp"
#include "epigame/report.hpp"
#include "epigame/symbolic_set.hpp"

namespace epigame {

constexpr std::uint64_t kDefaultOmegaCap = 3;

struct SymbolicGame {
  std::string name;
  // Property spec the step function eliminates by.
  std::string encodes;
  std::vector<SymbolicSet> initial;
  std::function<SymbolicRestriction(const SymbolicRestriction&)> step;
  // Meet of the chain step^k(g), k = 0, 1, ..., or nullopt when that chain
  // reaches a fixpoint after finitely many steps.
  std::function<std::optional<SymbolicRestriction>(const SymbolicRestriction&)> limit;
  // Successor steps taken in each block before consulting the limit rule.
  std::size_t block_cap = 8;
  // Whether the game is claimed to need a limit step before its fixpoint.
  bool claims_transfinite = false;

  // Optional certificates for sampled validation (two-player games).
  // payoff(i, own, other).
  std::function<Rational(PlayerIndex, const Rational&, const Rational&)> payoff;
  // A strategy that strictly dominates an eliminated x given g.
  std::function<Rational(PlayerIndex, const Rational&, const SymbolicRestriction&)>
      dominator;
  // An opponent point in g where alt does not beat the surviving x.
  std::function<std::optional<Rational>(PlayerIndex, const Rational&,
                                        const Rational&, const SymbolicRestriction&)>
      refuter;
  std::vector<SymbolicSet> strategy_space;
};

// Raised by the engine when a step gains a point or a limit keeps one.
class SymbolicValidationError : public ValidationError {
 public:
  SymbolicValidationError(std::string kind, PlayerIndex player, std::string point,
                          const std::string& message)
      : ValidationError(message),
        kind_(std::move(kind)),
        player_(player),
        point_(std::move(point)) {}
  // "not_contracting" or "limit_not_contained".
  const std::string& kind() const { return kind_; }
  PlayerIndex player() const { return player_; }
  const std::string& point() const { return point_; }

 private:
  std::string kind_;
  PlayerIndex player_;
  std::string point_;
};

enum class SymbolicStatus { kFixpoint, kUnresolvedAtBound };

std::string ToString(SymbolicStatus status);

struct SymbolicStep {
  Ordinal ordinal;
  SymbolicRestriction restriction;

  friend bool operator==(const SymbolicStep&, const SymbolicStep&) = default;
};

// Successor steps are listed up to the point where a limit was taken, so a
// block may show only its first block_cap iterates.
struct SymbolicTrace {
  std::vector<SymbolicStep> steps;
  SymbolicStatus status = SymbolicStatus::kFixpoint;
  Ordinal bound;
  // Set when status is kFixpoint.
  std::optional<Ordinal> closure_ordinal;
  // Last computed iterate.
  SymbolicRestriction outcome;

  const SymbolicRestriction* At(const Ordinal& o) const;

  friend bool operator==(const SymbolicTrace&, const SymbolicTrace&) = default;
};

// Throws ArgumentError when bound.omega exceeds omega_cap, ValidationError
// when a step grows its argument or a limit leaves an iterate, and
// BudgetError after max_block_steps successor steps within one block.
SymbolicTrace IterateSymbolic(const SymbolicGame& game, const Ordinal& bound,
                              std::uint64_t omega_cap = kDefaultOmegaCap,
                              std::size_t max_block_steps = 10'000);

CheckReport ValidateWitness(const SymbolicGame& game, std::size_t samples);

// Strategy k of player i becomes the point k.
SymbolicGame LiftFiniteGame(const Game& game, const PropertyProfile& profile);
Restriction LowerRestriction(const Game& game, const SymbolicRestriction& r);
IterationTrace LowerTrace(const Game& game, const SymbolicTrace& trace);

SymbolicGame WitnessTG();
// The witness with a limit rule that keeps a point the chain has dropped.
SymbolicGame BrokenLimitWitness();
SymbolicGame IdentityWitness();

std::vector<std::string> WitnessNames();
// Throws ArgumentError for unknown names.
SymbolicGame FindWitness(const std::string& name);

Json SymbolicTraceToJson(const SymbolicGame& game, const SymbolicTrace& trace);
SymbolicTrace SymbolicTraceFromJson(const Json& j);

}  // namespace epigame

#endif  // EPIGAME_TRANSFINITE_HPP_
