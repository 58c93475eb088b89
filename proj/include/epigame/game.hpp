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

#ifndef EPIGAME_GAME_HPP_
#define EPIGAME_GAME_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epigame/rational.hpp"

namespace epigame {

// Players are 0-based inside the library; files and the CLI number them 1..n.
using PlayerIndex = std::size_t;
using StrategyIndex = std::size_t;

// One strategy index per player. When used as an opponent profile for player
// i, the i-th slot is ignored.
using JointStrategy = std::vector<StrategyIndex>;

// Finite strategic game with exact payoffs. Immutable after construction.
class Game {
 public:
  // Strategy names per player; payoffs are stored joint-major with the first
  // player's strategy varying slowest, one n-vector per joint strategy.
  Game(std::string name, std::vector<std::vector<std::string>> strategy_names,
       std::vector<Rational> payoffs);

  static Game FromFunction(
      std::string name, std::vector<std::vector<std::string>> strategy_names,
      const std::function<std::vector<Rational>(const JointStrategy&)>& payoff);

  const std::string& name() const { return name_; }
  std::size_t num_players() const { return names_.size(); }
  std::size_t num_strategies(PlayerIndex i) const { return names_[i].size(); }
  std::size_t total_strategies() const;
  std::size_t max_strategies() const;
  std::size_t num_joint() const { return num_joint_; }

  const std::string& strategy_name(PlayerIndex i, StrategyIndex s) const {
    return names_[i][s];
  }
  const std::vector<std::string>& strategy_names(PlayerIndex i) const {
    return names_[i];
  }
  std::optional<StrategyIndex> FindStrategy(PlayerIndex i,
                                            std::string_view name) const;

  std::size_t JointIndex(std::span<const StrategyIndex> joint) const;
  JointStrategy JointFromIndex(std::size_t index) const;

  const Rational& payoff(PlayerIndex i,
                         std::span<const StrategyIndex> joint) const {
    return payoffs_[JointIndex(joint) * num_players() + i];
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::string name_;
  std::vector<std::vector<std::string>> names_;
  std::vector<Rational> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t num_joint_ = 1;
};

// Reads the line-oriented game format:
//
//   game <name>
//   players <n>
//   strategies <i> : <name>+
//   payoffs
//   <s1> ... <sn> : <q1> ... <qn>
//   end
//
// '#' starts a comment. Every error is a ParseError carrying its line.
Game ParseGame(std::string_view text);
Game LoadGameFile(const std::string& path);

// Canonical text rendering; ParseGame(WriteGame(g)) == g.
std::string WriteGame(const Game& game);

}  // namespace epigame

#endif  // EPIGAME_GAME_HPP_
