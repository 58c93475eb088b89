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

#ifndef EPIGAME_EPISTEMIC_HPP_
#define EPIGAME_EPISTEMIC_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "epigame/game.hpp"
#include "epigame/property.hpp"
#include "epigame/report.hpp"
#include "epigame/restriction.hpp"

namespace epigame {

// A set of states; bit w is state w. State spaces hold at most 64 states.
using Event = std::uint64_t;

constexpr std::size_t kMaxStates = 64;

inline Event FullEvent(std::size_t states) {
  return states >= 64 ? ~Event{0} : (Event{1} << states) - 1;
}

class PossibilityCorrespondence {
 public:
  PossibilityCorrespondence() = default;
  explicit PossibilityCorrespondence(std::vector<Event> cells)
      : cells_(std::move(cells)) {}

  // P(w) = {w} for every state.
  static PossibilityCorrespondence Identity(std::size_t states);

  std::size_t num_states() const { return cells_.size(); }
  Event operator()(std::size_t state) const { return cells_[state]; }
  const std::vector<Event>& cells() const { return cells_; }

  // (i) every P(w) is nonempty.
  bool IsSerial() const;
  // (ii) w' in P(w) implies P(w') = P(w).
  bool IsTransitiveEuclidean() const;
  // (iii) w in P(w).
  bool IsReflexive() const;

  bool IsBeliefCorrespondence() const { return IsSerial() && IsTransitiveEuclidean(); }
  bool IsKnowledgeCorrespondence() const {
    return IsBeliefCorrespondence() && IsReflexive();
  }

  friend bool operator==(const PossibilityCorrespondence&,
                         const PossibilityCorrespondence&) = default;

 private:
  std::vector<Event> cells_;
};

struct EpistemicModel {
  std::size_t num_states = 0;
  // strategies[i][w] = s_i(w).
  std::vector<std::vector<StrategyIndex>> strategies;
  std::vector<PossibilityCorrespondence> correspondences;

  // Throws ArgumentError when components disagree on the state count or a
  // strategy is out of range.
  void Validate(const Game& game) const;

  friend bool operator==(const EpistemicModel&, const EpistemicModel&) = default;
};

bool IsEvident(const EpistemicModel& model, Event f);

// {w | P_i(w) is a subset of e for all i}. Shared by K and B.
Event KnowledgeEvent(const EpistemicModel& model, Event e);
Event BeliefEvent(const EpistemicModel& model, Event e);

// Largest evident subset of e.
Event LargestEvidentSubset(const EpistemicModel& model, Event e);

// Throw ClassificationError unless every P_i is a knowledge (resp. belief)
// correspondence.
Event CommonKnowledgeEvent(const EpistemicModel& model, Event e);
// Largest evident subset of K e.
Event CommonKnowledgeEventViaK(const EpistemicModel& model, Event e);
Event CommonBeliefEvent(const EpistemicModel& model, Event e);

Restriction EventRestriction(const Game& game, const EpistemicModel& model,
                             Event e);

Event RationalStates(const Game& game, const EpistemicModel& model,
                     const PropertyProfile& profile);
Event RationalStates(const Game& game, const EpistemicModel& model,
                     const PropertyProfile& profile, PropertyOracle& oracle);

enum class EpistemicMode { kKnowledge, kBelief };

std::string ToString(EpistemicMode mode);

// Knowledge mode lists the partitions of the state space; belief mode lists
// every correspondence satisfying (i) and (ii).
std::vector<PossibilityCorrespondence> EnumerateCorrespondences(
    std::size_t states, EpistemicMode mode);

// Number of models enumerate_ck_cb visits; saturates at UINT64_MAX.
std::uint64_t CountModels(const Game& game, std::size_t omega_size,
                          EpistemicMode mode);

struct CkCbResult {
  Restriction restriction;
  std::uint64_t models = 0;
  // Knowledge mode only: models where the two forms of K* disagreed.
  std::uint64_t bridge_mismatches = 0;
};

// Joins G over the CK (knowledge) or CB (belief) states of every model with
// omega_size states. Throws ArgumentError when omega_size < max |T_i| and
// BudgetError when the model count exceeds budget.models.
CkCbResult EnumerateCkCb(const Game& game, std::size_t omega_size,
                         const PropertyProfile& profile, EpistemicMode mode,
                         const Budget& budget = {});

struct EpistemicReport {
  std::string profile;
  std::size_t omega_size = 0;
  std::uint64_t models_enumerated = 0;
  Restriction ck_restriction;
  Restriction cb_restriction;
  Restriction operator_outcome;
  Verdict verdict = Verdict::kPass;
  // Which comparisons applied: "monotone" (CK = CB = outcome) and/or
  // "singleton" (CK = full game).
  std::vector<std::string> applicable;
  std::vector<Json> findings;

  Json ToJson(const Game& game) const;
};

EpistemicReport VerifyEpistemic(const Game& game, std::size_t omega_size,
                                const PropertyProfile& profile,
                                const Budget& budget = {});

// True iff every distinct spec in the profile is monotone on the game.
bool ProfileIsMonotone(const PropertyProfile& profile, const Game& game,
                       const Budget& budget = {});
// True iff every distinct spec passes the singleton condition on the game.
bool ProfileSatisfiesSingleton(const PropertyProfile& profile, const Game& game);

struct WitnessResult {
  EpistemicModel model;
  Event event = 0;
  CheckReport report;
};

// Model with max |T_i| states whose event E is evident, lies in K* RAT and
// has G_E equal to the outcome. Throws PreconditionError unless the profile
// is monotone.
WitnessResult WitnessModelThm1(const Game& game, const PropertyProfile& profile,
                               const Budget& budget = {});

// States are the joint strategies, every cell a singleton. Throws
// PreconditionError unless the profile passes the singleton condition.
WitnessResult WitnessModelThm2(const Game& game, const PropertyProfile& profile,
                               const JointStrategy& joint);

Json EventToJson(Event e, std::size_t states);
Json ModelToJson(const Game& game, const EpistemicModel& model);

}  // namespace epigame

#endif  // EPIGAME_EPISTEMIC_HPP_
