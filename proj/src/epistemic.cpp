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

#include "epigame/epistemic.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>

#include "epigame/errors.hpp"

namespace epigame {
namespace {

using Assignment = std::vector<std::vector<StrategyIndex>>;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t SatPow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out = SatMul(out, base);
  return out;
}

bool Contains(Event e, std::size_t w) { return (e >> w) & 1U; }

Restriction Image(const Game& game, const Assignment& strategies, Event e) {
  Restriction out = Restriction::Empty(game);
  for (PlayerIndex i = 0; i < strategies.size(); ++i) {
    for (Event rest = e; rest != 0; rest &= rest - 1) {
      out[i].insert(strategies[i][std::countr_zero(rest)]);
    }
  }
  return out;
}

// Deletes states whose cell for some player leaves the current set.
template <typename CellFn>
Event Peel(Event e, std::size_t players, const CellFn& cell) {
  while (true) {
    Event next = e;
    for (Event rest = e; rest != 0; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      for (PlayerIndex i = 0; i < players; ++i) {
        if ((cell(i, w) & ~e) != 0) {
          next &= ~(Event{1} << w);
          break;
        }
      }
    }
    if (next == e) return e;
    e = next;
  }
}

template <typename CellFn>
Event AllCellsInside(Event e, std::size_t states, std::size_t players,
                     const CellFn& cell) {
  Event out = 0;
  for (std::size_t w = 0; w < states; ++w) {
    bool inside = true;
    for (PlayerIndex i = 0; i < players && inside; ++i) {
      inside = (cell(i, w) & ~e) == 0;
    }
    if (inside) out |= Event{1} << w;
  }
  return out;
}

void RequireClass(const EpistemicModel& model, bool knowledge) {
  for (PlayerIndex i = 0; i < model.correspondences.size(); ++i) {
    const auto& p = model.correspondences[i];
    const bool ok = knowledge ? p.IsKnowledgeCorrespondence()
                              : p.IsBeliefCorrespondence();
    if (!ok) {
      throw ClassificationError("possibility correspondence of player " +
                                std::to_string(i + 1) + " is not a " +
                                (knowledge ? "knowledge" : "belief") +
                                " correspondence");
    }
  }
}

// Restricted growth strings: block[w] <= 1 + max(block[0..w-1]).
void ForEachPartition(std::size_t n,
                      const std::function<void(const std::vector<std::size_t>&,
                                               std::size_t)>& fn) {
  if (n == 0) {
    fn({}, 0);
    return;
  }
  std::vector<std::size_t> block(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    fn(block, prefix_max[n - 1] + 1);
    std::size_t k = n - 1;
    while (k > 0 && block[k] > prefix_max[k - 1]) --k;
    if (k == 0) return;
    ++block[k];
    prefix_max[k] = std::max(prefix_max[k - 1], block[k]);
    for (std::size_t j = k + 1; j < n; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[k];
    }
  }
}

std::vector<std::uint64_t> StirlingRow(std::size_t n) {
  // row[k] = S(n, k)
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = m; k >= 1; --k) {
      row[k] = SatAdd(SatMul(k, row[k]), row[k - 1]);
    }
    row[0] = 0;
  }
  return row;
}

std::uint64_t Binomial(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) row[j] = SatAdd(row[j], row[j - 1]);
  }
  return row[k];
}

std::uint64_t CountCorrespondences(std::size_t m, EpistemicMode mode) {
  if (mode == EpistemicMode::kKnowledge) {
    std::uint64_t bell = 0;
    const auto row = StirlingRow(m);
    for (auto v : row) bell = SatAdd(bell, v);
    return bell;
  }
  std::uint64_t total = 0;
  for (std::size_t u = 1; u <= m; ++u) {
    const auto row = StirlingRow(u);
    std::uint64_t inner = 0;
    for (std::size_t k = 1; k <= u; ++k) {
      inner = SatAdd(inner, SatMul(row[k], SatPow(k, m - u)));
    }
    total = SatAdd(total, SatMul(Binomial(m, u), inner));
  }
  return total;
}

std::vector<std::size_t> DistinctSpecs(const PropertyProfile& profile) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    bool seen = false;
    for (auto j : out) seen = seen || profile[j] == profile[i];
    if (!seen) out.push_back(i);
  }
  return out;
}

}  // namespace

PossibilityCorrespondence PossibilityCorrespondence::Identity(std::size_t states) {
  std::vector<Event> cells(states);
  for (std::size_t w = 0; w < states; ++w) cells[w] = Event{1} << w;
  return PossibilityCorrespondence(std::move(cells));
}

bool PossibilityCorrespondence::IsSerial() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](Event c) { return c != 0; });
}

bool PossibilityCorrespondence::IsTransitiveEuclidean() const {
  for (std::size_t w = 0; w < cells_.size(); ++w) {
    for (Event rest = cells_[w]; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (v >= cells_.size() || cells_[v] != cells_[w]) return false;
    }
  }
  return true;
}

bool PossibilityCorrespondence::IsReflexive() const {
  for (std::size_t w = 0; w < cells_.size(); ++w) {
    if (!Contains(cells_[w], w)) return false;
  }
  return true;
}

void EpistemicModel::Validate(const Game& game) const {
  if (num_states == 0 || num_states > kMaxStates) {
    throw ArgumentError("state space must have between 1 and 64 states");
  }
  if (strategies.size() != game.num_players() ||
      correspondences.size() != game.num_players()) {
    throw ArgumentError("model does not have one assignment and one "
                        "correspondence per player");
  }
  const Event full = FullEvent(num_states);
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    if (strategies[i].size() != num_states ||
        correspondences[i].num_states() != num_states) {
      throw ArgumentError("model components disagree on the number of states");
    }
    for (auto s : strategies[i]) {
      if (s >= game.num_strategies(i)) {
        throw ArgumentError("strategy assignment of player " +
                            std::to_string(i + 1) + " is out of range");
      }
    }
    for (auto c : correspondences[i].cells()) {
      if ((c & ~full) != 0) {
        throw ArgumentError("possibility cell leaves the state space");
      }
    }
  }
}

bool IsEvident(const EpistemicModel& model, Event f) {
  for (Event rest = f; rest != 0; rest &= rest - 1) {
    const auto w = static_cast<std::size_t>(std::countr_zero(rest));
    for (const auto& p : model.correspondences) {
      if ((p(w) & ~f) != 0) return false;
    }
  }
  return true;
}

Event KnowledgeEvent(const EpistemicModel& model, Event e) {
  return AllCellsInside(e, model.num_states, model.correspondences.size(),
                        [&](PlayerIndex i, std::size_t w) {
                          return model.correspondences[i](w);
                        });
}

Event BeliefEvent(const EpistemicModel& model, Event e) {
  return KnowledgeEvent(model, e);
}

Event LargestEvidentSubset(const EpistemicModel& model, Event e) {
  return Peel(e & FullEvent(model.num_states), model.correspondences.size(),
              [&](PlayerIndex i, std::size_t w) {
                return model.correspondences[i](w);
              });
}

Event CommonKnowledgeEvent(const EpistemicModel& model, Event e) {
  RequireClass(model, true);
  return LargestEvidentSubset(model, e);
}

Event CommonKnowledgeEventViaK(const EpistemicModel& model, Event e) {
  RequireClass(model, true);
  return LargestEvidentSubset(model, KnowledgeEvent(model, e));
}

Event CommonBeliefEvent(const EpistemicModel& model, Event e) {
  RequireClass(model, false);
  return LargestEvidentSubset(model, BeliefEvent(model, e));
}

Restriction EventRestriction(const Game& game, const EpistemicModel& model,
                             Event e) {
  model.Validate(game);
  return Image(game, model.strategies, e & FullEvent(model.num_states));
}

Event RationalStates(const Game& game, const EpistemicModel& model,
                     const PropertyProfile& profile) {
  PropertyOracle oracle(game);
  return RationalStates(game, model, profile, oracle);
}

Event RationalStates(const Game& game, const EpistemicModel& model,
                     const PropertyProfile& profile, PropertyOracle& oracle) {
  model.Validate(game);
  ValidateProfile(profile, game);
  Event out = 0;
  for (std::size_t w = 0; w < model.num_states; ++w) {
    bool rational = true;
    for (PlayerIndex i = 0; i < game.num_players() && rational; ++i) {
      const Restriction g =
          Image(game, model.strategies, model.correspondences[i](w));
      rational = oracle(profile[i], i, model.strategies[i][w], g);
    }
    if (rational) out |= Event{1} << w;
  }
  return out;
}

std::string ToString(EpistemicMode mode) {
  return mode == EpistemicMode::kKnowledge ? "knowledge" : "belief";
}

std::vector<PossibilityCorrespondence> EnumerateCorrespondences(
    std::size_t states, EpistemicMode mode) {
  if (states == 0 || states > kMaxStates) {
    throw ArgumentError("state space must have between 1 and 64 states");
  }
  std::vector<PossibilityCorrespondence> out;
  if (mode == EpistemicMode::kKnowledge) {
    ForEachPartition(states, [&](const std::vector<std::size_t>& block,
                                 std::size_t blocks) {
      std::vector<Event> masks(blocks, 0);
      for (std::size_t w = 0; w < states; ++w) masks[block[w]] |= Event{1} << w;
      std::vector<Event> cells(states);
      for (std::size_t w = 0; w < states; ++w) cells[w] = masks[block[w]];
      out.emplace_back(std::move(cells));
    });
    return out;
  }
  // Choose the states covered by target cells, partition them, then send
  // each remaining state to one of the cells.
  for (Event covered = 1; covered <= FullEvent(states); ++covered) {
    std::vector<std::size_t> inside;
    std::vector<std::size_t> outside;
    for (std::size_t w = 0; w < states; ++w) {
      (Contains(covered, w) ? inside : outside).push_back(w);
    }
    ForEachPartition(inside.size(), [&](const std::vector<std::size_t>& block,
                                        std::size_t blocks) {
      std::vector<Event> masks(blocks, 0);
      for (std::size_t t = 0; t < inside.size(); ++t) {
        masks[block[t]] |= Event{1} << inside[t];
      }
      std::vector<std::size_t> choice(outside.size(), 0);
      while (true) {
        std::vector<Event> cells(states);
        for (std::size_t t = 0; t < inside.size(); ++t) {
          cells[inside[t]] = masks[block[t]];
        }
        for (std::size_t t = 0; t < outside.size(); ++t) {
          cells[outside[t]] = masks[choice[t]];
        }
        out.emplace_back(std::move(cells));
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == blocks) choice[k++] = 0;
        if (k == choice.size()) break;
      }
    });
    if (covered == FullEvent(states)) break;
  }
  return out;
}

std::uint64_t CountModels(const Game& game, std::size_t omega_size,
                          EpistemicMode mode) {
  std::uint64_t total = 1;
  const std::uint64_t corr = CountCorrespondences(omega_size, mode);
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    total = SatMul(total, SatPow(game.num_strategies(i), omega_size));
    total = SatMul(total, corr);
  }
  return total;
}

CkCbResult EnumerateCkCb(const Game& game, std::size_t omega_size,
                         const PropertyProfile& profile, EpistemicMode mode,
                         const Budget& budget) {
  ValidateProfile(profile, game);
  if (omega_size < game.max_strategies()) {
    throw ArgumentError("state space of size " + std::to_string(omega_size) +
                        " is smaller than the largest strategy set (" +
                        std::to_string(game.max_strategies()) + ")");
  }
  if (omega_size > kMaxStates) {
    throw ArgumentError("state space must have at most 64 states");
  }
  const std::uint64_t count = CountModels(game, omega_size, mode);
  if (count > budget.models) {
    throw BudgetError(
        "model enumeration needs " +
        (count == kSaturated ? std::string("more than 2^64-1")
                             : std::to_string(count)) +
        " models, budget is " + std::to_string(budget.models));
  }

  const std::size_t n = game.num_players();
  const std::size_t m = omega_size;
  const Event full = FullEvent(m);
  const auto corrs = EnumerateCorrespondences(m, mode);
  const std::size_t nc = corrs.size();
  PropertyOracle oracle(game);

  CkCbResult result;
  result.restriction = Restriction::Empty(game);

  Assignment strategies(n, std::vector<StrategyIndex>(m, 0));
  std::vector<Restriction> image(std::size_t{1} << m);
  std::vector<std::vector<Event>> rat_by_cell(n, std::vector<Event>(image.size()));
  std::vector<std::vector<Event>> rat_by_corr(n, std::vector<Event>(nc));
  std::vector<std::size_t> pick(n, 0);

  while (true) {
    image[0] = Restriction::Empty(game);
    for (Event c = 1; c <= full; ++c) {
      const auto w = static_cast<std::size_t>(std::countr_zero(c));
      image[c] = image[c & (c - 1)];
      for (PlayerIndex i = 0; i < n; ++i) image[c][i].insert(strategies[i][w]);
      if (c == full) break;
    }
    for (PlayerIndex i = 0; i < n; ++i) {
      std::vector<Event> holders(game.num_strategies(i), 0);
      for (std::size_t w = 0; w < m; ++w) holders[strategies[i][w]] |= Event{1} << w;
      for (Event c = 1; c <= full; ++c) {
        Event mask = 0;
        for (StrategyIndex s = 0; s < holders.size(); ++s) {
          if (holders[s] != 0 && oracle(profile[i], i, s, image[c])) mask |= holders[s];
        }
        rat_by_cell[i][c] = mask;
        if (c == full) break;
      }
      for (std::size_t k = 0; k < nc; ++k) {
        Event mask = 0;
        for (std::size_t w = 0; w < m; ++w) {
          if (Contains(rat_by_cell[i][corrs[k](w)], w)) mask |= Event{1} << w;
        }
        rat_by_corr[i][k] = mask;
      }
    }

    Event reached = 0;
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      Event rat = full;
      for (PlayerIndex i = 0; i < n; ++i) rat &= rat_by_corr[i][pick[i]];
      const auto cell = [&](PlayerIndex i, std::size_t w) {
        return corrs[pick[i]](w);
      };
      if (mode == EpistemicMode::kKnowledge) {
        const Event ck = Peel(rat, n, cell);
        const Event ck_via_k = Peel(AllCellsInside(rat, m, n, cell), n, cell);
        if (ck != ck_via_k) ++result.bridge_mismatches;
        reached |= ck;
      } else {
        reached |= rat & Peel(AllCellsInside(rat, m, n, cell), n, cell);
      }
      ++result.models;
      std::size_t k = 0;
      while (k < n && ++pick[k] == nc) pick[k++] = 0;
      if (k == n) break;
    }
    result.restriction = Join(result.restriction, Image(game, strategies, reached));

    // Next joint assignment: odometer over (player, state) digits.
    std::size_t digit = 0;
    for (; digit < n * m; ++digit) {
      const PlayerIndex i = digit / m;
      const std::size_t w = digit % m;
      if (++strategies[i][w] < game.num_strategies(i)) break;
      strategies[i][w] = 0;
    }
    if (digit == n * m) break;
  }
  return result;
}

bool ProfileIsMonotone(const PropertyProfile& profile, const Game& game,
                       const Budget& budget) {
  ValidateProfile(profile, game);
  for (auto i : DistinctSpecs(profile)) {
    if (!CheckPropertyMonotone(profile[i], game, budget).passed()) return false;
  }
  return true;
}

bool ProfileSatisfiesSingleton(const PropertyProfile& profile, const Game& game) {
  ValidateProfile(profile, game);
  for (auto i : DistinctSpecs(profile)) {
    if (!CheckSingletonCondition(profile[i], game).passed()) return false;
  }
  return true;
}

Json EpistemicReport::ToJson(const Game& game) const {
  Json j = Json::object();
  j["profile"] = profile;
  j["omega_size"] = omega_size;
  j["models_enumerated"] = models_enumerated;
  j["ck_restriction"] = RestrictionToJson(game, ck_restriction);
  j["cb_restriction"] = RestrictionToJson(game, cb_restriction);
  j["operator_outcome"] = RestrictionToJson(game, operator_outcome);
  j["verdict"] = epigame::ToString(verdict);
  j["applicable"] = applicable;
  j["findings"] = findings;
  return j;
}

EpistemicReport VerifyEpistemic(const Game& game, std::size_t omega_size,
                                const PropertyProfile& profile,
                                const Budget& budget) {
  ValidateProfile(profile, game);
  EpistemicReport report;
  report.profile = profile.ToString();
  report.omega_size = omega_size;
  report.operator_outcome = Outcome(profile, game, budget.iteration_steps).outcome;

  const auto ck = EnumerateCkCb(game, omega_size, profile,
                                EpistemicMode::kKnowledge, budget);
  const auto cb =
      EnumerateCkCb(game, omega_size, profile, EpistemicMode::kBelief, budget);
  report.models_enumerated = ck.models + cb.models;
  report.ck_restriction = ck.restriction;
  report.cb_restriction = cb.restriction;

  auto fail = [&](Json finding) {
    report.verdict = Verdict::kFail;
    report.findings.push_back(std::move(finding));
  };
  if (ck.bridge_mismatches != 0) {
    fail({{"kind", "common_knowledge_forms_disagree"},
          {"models", ck.bridge_mismatches}});
  }
  if (ProfileIsMonotone(profile, game, budget)) {
    report.applicable.emplace_back("monotone");
    if (ck.restriction != report.operator_outcome) {
      fail({{"kind", "ck_differs_from_outcome"},
            {"ck", RestrictionToJson(game, ck.restriction)}});
    }
    if (cb.restriction != report.operator_outcome) {
      fail({{"kind", "cb_differs_from_outcome"},
            {"cb", RestrictionToJson(game, cb.restriction)}});
    }
  }
  if (ProfileSatisfiesSingleton(profile, game)) {
    report.applicable.emplace_back("singleton");
    if (ck.restriction != RestrictionTop(game)) {
      fail({{"kind", "ck_differs_from_full_game"},
            {"ck", RestrictionToJson(game, ck.restriction)}});
    }
  }
  if (report.applicable.empty() && report.verdict == Verdict::kPass) {
    report.verdict = Verdict::kPreconditionViolated;
    report.findings.push_back(
        {{"kind", "no_applicable_comparison"},
         {"reason", "profile is neither monotone nor passes the singleton "
                    "condition on this game"}});
  }
  return report;
}

WitnessResult WitnessModelThm1(const Game& game, const PropertyProfile& profile,
                               const Budget& budget) {
  if (!ProfileIsMonotone(profile, game, budget)) {
    throw PreconditionError("profile " + profile.ToString() +
                            " is not monotone on game '" + game.name() + "'");
  }
  const Restriction outcome = Outcome(profile, game, budget.iteration_steps).outcome;
  const std::size_t n = game.num_players();
  const std::size_t m = game.max_strategies();
  if (m > kMaxStates) throw ArgumentError("witness needs more than 64 states");

  WitnessResult result;
  EpistemicModel& model = result.model;
  model.num_states = m;
  model.strategies.assign(n, std::vector<StrategyIndex>(m, 0));
  CheckReport& report = result.report;
  report.check = "witness_thm1";
  report.details["profile"] = profile.ToString();
  report.details["states"] = m;
  report.details["outcome"] = RestrictionToJson(game, outcome);

  if (outcome.AnyEmpty()) {
    for (PlayerIndex i = 0; i < n; ++i) {
      for (std::size_t w = 0; w < m; ++w) {
        model.strategies[i][w] = w % game.num_strategies(i);
      }
    }
    model.correspondences.assign(n, PossibilityCorrespondence::Identity(m));
    result.event = 0;
    report.details["degenerate"] = true;
    report.details["note"] =
        "outcome has an empty component; the event is empty and every "
        "check holds vacuously";
    return result;
  }

  PlayerIndex j0 = 0;
  for (PlayerIndex i = 1; i < n; ++i) {
    if (outcome[i].size() > outcome[j0].size()) j0 = i;
  }
  auto complement = [&](PlayerIndex i) {
    return (StrategySet::Full(game.num_strategies(i)) & StrategySet(~outcome[i].bits()))
        .members();
  };
  {
    const auto kept = outcome[j0].members();
    const auto rest = complement(j0);
    for (std::size_t w = 0; w < m; ++w) {
      if (w < kept.size()) {
        model.strategies[j0][w] = kept[w];
      } else if (!rest.empty()) {
        model.strategies[j0][w] = rest[(w - kept.size()) % rest.size()];
      } else {
        model.strategies[j0][w] = kept[w % kept.size()];
      }
    }
  }
  Event e = 0;
  for (std::size_t w = 0; w < m; ++w) {
    if (outcome[j0].contains(model.strategies[j0][w])) e |= Event{1} << w;
  }
  Json exact = Json::array();
  for (PlayerIndex k = 0; k < n; ++k) {
    if (k != j0) {
      const auto kept = outcome[k].members();
      const auto rest = complement(k);
      std::size_t in = 0;
      std::size_t out = 0;
      for (std::size_t w = 0; w < m; ++w) {
        if (Contains(e, w)) {
          model.strategies[k][w] = kept[in++ % kept.size()];
        } else if (!rest.empty()) {
          model.strategies[k][w] = rest[out++ % rest.size()];
        } else {
          model.strategies[k][w] = kept[0];
        }
      }
    }
    Event preimage = 0;
    for (std::size_t w = 0; w < m; ++w) {
      if (outcome[k].contains(model.strategies[k][w])) preimage |= Event{1} << w;
    }
    exact.push_back(preimage == e);
  }
  std::vector<Event> cells(m);
  for (std::size_t w = 0; w < m; ++w) cells[w] = Contains(e, w) ? e : Event{1} << w;
  model.correspondences.assign(n, PossibilityCorrespondence(cells));
  result.event = e;

  const bool evident = IsEvident(model, e);
  const Restriction g_e = EventRestriction(game, model, e);
  const Event rat = RationalStates(game, model, profile);
  const Event ck = CommonKnowledgeEvent(model, rat);
  report.details["largest_player"] = j0 + 1;
  report.details["event"] = EventToJson(e, m);
  report.details["event_restriction"] = RestrictionToJson(game, g_e);
  report.details["preimage_equals_event"] = exact;
  report.details["evident"] = evident;
  report.details["event_restriction_equals_outcome"] = g_e == outcome;
  report.details["event_in_rat"] = (e & ~rat) == 0;
  report.details["event_in_ck_rat"] = (e & ~ck) == 0;
  if (!evident) report.Fail({{"kind", "event_not_evident"}});
  if (g_e != outcome) report.Fail({{"kind", "event_restriction_differs"}});
  if ((e & ~rat) != 0) {
    report.Fail({{"kind", "event_not_in_rat"}, {"states", EventToJson(e & ~rat, m)}});
  }
  if ((e & ~ck) != 0) {
    report.Fail({{"kind", "event_not_in_ck_rat"}, {"states", EventToJson(e & ~ck, m)}});
  }
  return result;
}

WitnessResult WitnessModelThm2(const Game& game, const PropertyProfile& profile,
                               const JointStrategy& joint) {
  if (!ProfileSatisfiesSingleton(profile, game)) {
    throw PreconditionError("profile " + profile.ToString() +
                            " fails the singleton condition on game '" +
                            game.name() + "'");
  }
  if (joint.size() != game.num_players()) {
    throw ArgumentError("joint strategy has the wrong number of players");
  }
  for (PlayerIndex i = 0; i < joint.size(); ++i) {
    if (joint[i] >= game.num_strategies(i)) {
      throw ArgumentError("joint strategy is out of range");
    }
  }
  const std::size_t m = game.num_joint();
  if (m > kMaxStates) {
    throw ArgumentError("game has more than 64 joint strategies");
  }
  WitnessResult result;
  EpistemicModel& model = result.model;
  model.num_states = m;
  model.strategies.assign(game.num_players(), std::vector<StrategyIndex>(m));
  for (std::size_t w = 0; w < m; ++w) {
    const auto state = game.JointFromIndex(w);
    for (PlayerIndex i = 0; i < game.num_players(); ++i) {
      model.strategies[i][w] = state[i];
    }
  }
  model.correspondences.assign(game.num_players(),
                               PossibilityCorrespondence::Identity(m));
  const std::size_t target = game.JointIndex(joint);
  result.event = Event{1} << target;

  const Event rat = RationalStates(game, model, profile);
  const Event ck = CommonKnowledgeEvent(model, rat);
  CheckReport& report = result.report;
  report.check = "witness_thm2";
  report.details["profile"] = profile.ToString();
  report.details["states"] = m;
  Json names = Json::array();
  for (PlayerIndex i = 0; i < joint.size(); ++i) {
    names.push_back(game.strategy_name(i, joint[i]));
  }
  report.details["target"] = names;
  report.details["target_in_rat"] = Contains(rat, target);
  report.details["target_in_ck_rat"] = Contains(ck, target);
  if (!Contains(ck, target)) {
    report.Fail({{"kind", "target_not_in_ck_rat"}, {"target", names}});
  }
  return result;
}

Json EventToJson(Event e, std::size_t states) {
  Json out = Json::array();
  for (std::size_t w = 0; w < states; ++w) {
    if (Contains(e, w)) out.push_back(w);
  }
  return out;
}

Json ModelToJson(const Game& game, const EpistemicModel& model) {
  Json j = Json::object();
  j["states"] = model.num_states;
  Json strategies = Json::array();
  for (PlayerIndex i = 0; i < model.strategies.size(); ++i) {
    Json row = Json::array();
    for (auto s : model.strategies[i]) row.push_back(game.strategy_name(i, s));
    strategies.push_back(row);
  }
  j["strategies"] = strategies;
  Json corrs = Json::array();
  for (const auto& p : model.correspondences) {
    Json row = Json::array();
    for (auto c : p.cells()) row.push_back(EventToJson(c, model.num_states));
    corrs.push_back(row);
  }
  j["correspondences"] = corrs;
  return j;
}

}  // namespace epigame
