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

#ifndef EPIGAME_RESTRICTION_HPP_
#define EPIGAME_RESTRICTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "epigame/game.hpp"

namespace epigame {

// Subset of one player's strategies, as a bit mask over the ordered list.
class StrategySet {
 public:
  StrategySet() = default;
  explicit StrategySet(std::uint64_t bits) : bits_(bits) {}
  static StrategySet Full(std::size_t count) {
    return StrategySet(count >= 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << count) - 1);
  }
  static StrategySet Single(StrategyIndex s) {
    return StrategySet(std::uint64_t{1} << s);
  }

  bool contains(StrategyIndex s) const { return (bits_ >> s) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::uint64_t bits() const { return bits_; }
  std::vector<StrategyIndex> members() const;

  void insert(StrategyIndex s) { bits_ |= std::uint64_t{1} << s; }
  void erase(StrategyIndex s) { bits_ &= ~(std::uint64_t{1} << s); }

  bool IsSubsetOf(StrategySet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  StrategySet operator&(StrategySet o) const { return StrategySet(bits_ & o.bits_); }
  StrategySet operator|(StrategySet o) const { return StrategySet(bits_ | o.bits_); }

  friend bool operator==(StrategySet, StrategySet) = default;
  friend auto operator<=>(StrategySet, StrategySet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// A sub-game (S_1, ..., S_n) with S_i a subset of T_i. Components may be
// empty, which keeps the lattice of restrictions complete.
class Restriction {
 public:
  Restriction() = default;
  explicit Restriction(std::vector<StrategySet> sets) : sets_(std::move(sets)) {}

  // Throws ArgumentError when a name is unknown.
  static Restriction FromNames(const Game& game,
                               const std::vector<std::vector<std::string>>& names);
  static Restriction Empty(const Game& game);
  static Restriction Singletons(const Game& game, const JointStrategy& joint);

  std::size_t num_players() const { return sets_.size(); }
  StrategySet operator[](PlayerIndex i) const { return sets_[i]; }
  StrategySet& operator[](PlayerIndex i) { return sets_[i]; }
  const std::vector<StrategySet>& sets() const { return sets_; }

  bool AnyEmpty() const;
  std::size_t total_size() const;

  // Number of opponent profiles in S_{-i}.
  std::size_t OpponentCount(PlayerIndex i) const;

  std::vector<std::vector<std::string>> Names(const Game& game) const;
  // "({C,D},{D})"
  std::string ToString(const Game& game) const;

  friend bool operator==(const Restriction&, const Restriction&) = default;
  friend auto operator<=>(const Restriction&, const Restriction&) = default;

 private:
  std::vector<StrategySet> sets_;
};

struct RestrictionHash {
  std::size_t operator()(const Restriction& r) const;
};

// The top element (T_1, ..., T_n).
Restriction RestrictionTop(const Game& game);

// Componentwise inclusion. Throws ShapeError on mismatched player counts.
bool LatticeLeq(const Restriction& a, const Restriction& b);

// Componentwise intersection / union. Throws ArgumentError on an empty list.
Restriction LatticeMeet(std::span<const Restriction> gs);
Restriction LatticeJoin(std::span<const Restriction> gs);
Restriction Meet(const Restriction& a, const Restriction& b);
Restriction Join(const Restriction& a, const Restriction& b);

// Throws ShapeError unless r fits the strategy sets of game.
void CheckShape(const Game& game, const Restriction& r);

// Enumeration of the whole lattice in a fixed order: the key of a
// restriction concatenates the players' masks, player 1 in the low bits.
class RestrictionLattice {
 public:
  // Throws BudgetError when sum |T_i| exceeds max_bits.
  RestrictionLattice(const Game& game, std::size_t max_bits);

  std::size_t bits() const { return total_bits_; }
  std::uint64_t size() const { return std::uint64_t{1} << total_bits_; }
  Restriction Decode(std::uint64_t key) const;
  std::uint64_t Encode(const Restriction& r) const;

 private:
  std::vector<std::size_t> widths_;
  std::vector<std::size_t> offsets_;
  std::size_t total_bits_ = 0;
};

// Calls fn(joint) for every profile of S_{-i}; joint[i] is left as given.
// Nothing is called when some opponent component is empty.
void ForEachOpponentProfile(const Restriction& g, PlayerIndex i,
                            JointStrategy& joint,
                            const std::function<void(const JointStrategy&)>& fn);

// Materialized S_{-i}, each entry a joint strategy whose i-th slot is 0.
std::vector<JointStrategy> OpponentProfiles(const Restriction& g, PlayerIndex i);

}  // namespace epigame

#endif  // EPIGAME_RESTRICTION_HPP_
