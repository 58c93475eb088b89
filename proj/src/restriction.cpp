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

#include "epigame/restriction.hpp"

#include <bit>

#include "epigame/errors.hpp"

namespace epigame {

std::size_t StrategySet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<StrategyIndex> StrategySet::members() const {
  std::vector<StrategyIndex> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<StrategyIndex>(std::countr_zero(b)));
  }
  return out;
}

Restriction Restriction::FromNames(
    const Game& game, const std::vector<std::vector<std::string>>& names) {
  if (names.size() != game.num_players()) {
    throw ShapeError("restriction has " + std::to_string(names.size()) +
                     " components, game has " +
                     std::to_string(game.num_players()) + " players");
  }
  std::vector<StrategySet> sets(names.size());
  for (PlayerIndex i = 0; i < names.size(); ++i) {
    for (const auto& n : names[i]) {
      auto s = game.FindStrategy(i, n);
      if (!s) {
        throw ArgumentError("unknown strategy '" + n + "' for player " +
                            std::to_string(i + 1));
      }
      sets[i].insert(*s);
    }
  }
  return Restriction(std::move(sets));
}

Restriction Restriction::Empty(const Game& game) {
  return Restriction(std::vector<StrategySet>(game.num_players()));
}

Restriction Restriction::Singletons(const Game& game, const JointStrategy& joint) {
  std::vector<StrategySet> sets;
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    sets.push_back(StrategySet::Single(joint.at(i)));
  }
  return Restriction(std::move(sets));
}

bool Restriction::AnyEmpty() const {
  for (auto s : sets_) {
    if (s.empty()) return true;
  }
  return false;
}

std::size_t Restriction::total_size() const {
  std::size_t total = 0;
  for (auto s : sets_) total += s.size();
  return total;
}

std::size_t Restriction::OpponentCount(PlayerIndex i) const {
  std::size_t count = 1;
  for (PlayerIndex j = 0; j < sets_.size(); ++j) {
    if (j != i) count *= sets_[j].size();
  }
  return count;
}

std::vector<std::vector<std::string>> Restriction::Names(const Game& game) const {
  std::vector<std::vector<std::string>> out(sets_.size());
  for (PlayerIndex i = 0; i < sets_.size(); ++i) {
    for (auto s : sets_[i].members()) out[i].push_back(game.strategy_name(i, s));
  }
  return out;
}

std::string Restriction::ToString(const Game& game) const {
  std::string out = "(";
  for (PlayerIndex i = 0; i < sets_.size(); ++i) {
    if (i > 0) out += ",";
    out += "{";
    bool first = true;
    for (auto s : sets_[i].members()) {
      if (!first) out += ",";
      out += game.strategy_name(i, s);
      first = false;
    }
    out += "}";
  }
  return out + ")";
}

std::size_t RestrictionHash::operator()(const Restriction& r) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto s : r.sets()) {
    h ^= std::hash<std::uint64_t>{}(s.bits()) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

Restriction RestrictionTop(const Game& game) {
  std::vector<StrategySet> sets;
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    sets.push_back(StrategySet::Full(game.num_strategies(i)));
  }
  return Restriction(std::move(sets));
}

bool LatticeLeq(const Restriction& a, const Restriction& b) {
  if (a.num_players() != b.num_players()) {
    throw ShapeError("restrictions over different player counts");
  }
  for (PlayerIndex i = 0; i < a.num_players(); ++i) {
    if (!a[i].IsSubsetOf(b[i])) return false;
  }
  return true;
}

Restriction Meet(const Restriction& a, const Restriction& b) {
  if (a.num_players() != b.num_players()) {
    throw ShapeError("restrictions over different player counts");
  }
  Restriction out = a;
  for (PlayerIndex i = 0; i < a.num_players(); ++i) out[i] = a[i] & b[i];
  return out;
}

Restriction Join(const Restriction& a, const Restriction& b) {
  if (a.num_players() != b.num_players()) {
    throw ShapeError("restrictions over different player counts");
  }
  Restriction out = a;
  for (PlayerIndex i = 0; i < a.num_players(); ++i) out[i] = a[i] | b[i];
  return out;
}

Restriction LatticeMeet(std::span<const Restriction> gs) {
  if (gs.empty()) throw ArgumentError("meet of an empty list");
  Restriction out = gs.front();
  for (const auto& g : gs.subspan(1)) out = Meet(out, g);
  return out;
}

Restriction LatticeJoin(std::span<const Restriction> gs) {
  if (gs.empty()) throw ArgumentError("join of an empty list");
  Restriction out = gs.front();
  for (const auto& g : gs.subspan(1)) out = Join(out, g);
  return out;
}

void CheckShape(const Game& game, const Restriction& r) {
  if (r.num_players() != game.num_players()) {
    throw ShapeError("restriction has " + std::to_string(r.num_players()) +
                     " components, game has " +
                     std::to_string(game.num_players()) + " players");
  }
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    if (!r[i].IsSubsetOf(StrategySet::Full(game.num_strategies(i)))) {
      throw ShapeError("restriction component " + std::to_string(i + 1) +
                       " names strategies outside the game");
    }
  }
}

RestrictionLattice::RestrictionLattice(const Game& game, std::size_t max_bits) {
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    offsets_.push_back(total_bits_);
    widths_.push_back(game.num_strategies(i));
    total_bits_ += game.num_strategies(i);
  }
  if (total_bits_ > max_bits || total_bits_ >= 63) {
    throw BudgetError("lattice has 2^" + std::to_string(total_bits_) +
                      " restrictions; enumeration limit is 2^" +
                      std::to_string(max_bits));
  }
}

Restriction RestrictionLattice::Decode(std::uint64_t key) const {
  std::vector<StrategySet> sets;
  for (std::size_t i = 0; i < widths_.size(); ++i) {
    const std::uint64_t mask = (std::uint64_t{1} << widths_[i]) - 1;
    sets.emplace_back((key >> offsets_[i]) & mask);
  }
  return Restriction(std::move(sets));
}

std::uint64_t RestrictionLattice::Encode(const Restriction& r) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < widths_.size(); ++i) {
    key |= r[i].bits() << offsets_[i];
  }
  return key;
}

void ForEachOpponentProfile(
    const Restriction& g, PlayerIndex i, JointStrategy& joint,
    const std::function<void(const JointStrategy&)>& fn) {
  const std::size_t n = g.num_players();
  std::vector<std::vector<StrategyIndex>> members(n);
  for (PlayerIndex j = 0; j < n; ++j) {
    if (j == i) continue;
    members[j] = g[j].members();
    if (members[j].empty()) return;
  }
  std::vector<std::size_t> pos(n, 0);
  for (PlayerIndex j = 0; j < n; ++j) {
    if (j != i) joint[j] = members[j][0];
  }
  while (true) {
    fn(joint);
    std::size_t j = n;
    while (j-- > 0) {
      if (j == i) continue;
      if (++pos[j] < members[j].size()) {
        joint[j] = members[j][pos[j]];
        break;
      }
      pos[j] = 0;
      joint[j] = members[j][0];
    }
    if (j == static_cast<std::size_t>(-1)) return;
  }
}

std::vector<JointStrategy> OpponentProfiles(const Restriction& g, PlayerIndex i) {
  std::vector<JointStrategy> out;
  JointStrategy joint(g.num_players(), 0);
  ForEachOpponentProfile(g, i, joint,
                         [&](const JointStrategy& j) { out.push_back(j); });
  return out;
}

}  // namespace epigame
