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

#ifndef EPIGAME_PROPERTY_HPP_
#define EPIGAME_PROPERTY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epigame/dominance.hpp"
#include "epigame/game.hpp"
#include "epigame/iteration.hpp"
#include "epigame/report.hpp"
#include "epigame/restriction.hpp"

namespace epigame {

enum class PropertyKind { kSd, kMsd, kBr };
enum class Scope { kGlobal, kLocal };

// A player's rationality notion. Global properties compare against all of
// T_i, local ones against S_i of the current restriction.
struct PropertySpec {
  PropertyKind kind = PropertyKind::kSd;
  Scope scope = Scope::kLocal;
  std::optional<BeliefKind> belief;  // present iff kind == kBr

  // sd:l | sd:g | msd:l | msd:g | br:{l,g}:{pure,corr,ind}
  static PropertySpec Parse(std::string_view text);
  std::string ToString() const;

  friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

// One property per player.
class PropertyProfile {
 public:
  PropertyProfile() = default;
  explicit PropertyProfile(std::vector<PropertySpec> specs)
      : specs_(std::move(specs)) {}
  static PropertyProfile Uniform(const PropertySpec& spec, std::size_t players);
  // "sd:l" for every player, or "1=sd:g,2=br:g:pure" naming each player once.
  static PropertyProfile Parse(std::string_view text, std::size_t players);

  std::size_t size() const { return specs_.size(); }
  const PropertySpec& operator[](PlayerIndex i) const { return specs_[i]; }
  const std::vector<PropertySpec>& specs() const { return specs_; }
  bool IsUniform() const;

  // "sd:l" when uniform, otherwise "1=sd:g,2=br:g:pure".
  std::string ToString() const;

  friend bool operator==(const PropertyProfile&, const PropertyProfile&) = default;

 private:
  std::vector<PropertySpec> specs_;
};

// Throws ArgumentError on a length mismatch and UnsupportedConfiguration for
// independent beliefs in games with more than two players.
void ValidateProfile(const PropertyProfile& profile, const Game& game);

// phi(s, G, G'): the belief/dominance context is G, the comparison pool is
// the i-th component of G'.
bool EvalPropertyWithPool(const PropertySpec& spec, const Game& game,
                          PlayerIndex i, StrategyIndex s,
                          const Restriction& context, StrategySet pool);

// phi(s, G) with G' = H for global and G' = G for local properties.
bool EvalProperty(const PropertySpec& spec, const Game& game, PlayerIndex i,
                  StrategyIndex s, const Restriction& g);

// Memoizing front end to EvalProperty for one game.
class PropertyOracle {
 public:
  explicit PropertyOracle(const Game& game) : game_(game) {}
  bool operator()(const PropertySpec& spec, PlayerIndex i, StrategyIndex s,
                  const Restriction& g);
  std::size_t evaluations() const { return evaluations_; }

 private:
  struct Key {
    int spec;
    PlayerIndex player;
    StrategyIndex strategy;
    Restriction g;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  const Game& game_;
  std::unordered_map<Key, bool, KeyHash> cache_;
  std::size_t evaluations_ = 0;
};

// T(G) = (S'_1, ..., S'_n) with S'_i the members of S_i satisfying phi_i.
Restriction ApplyOperator(const PropertyProfile& profile, const Game& game,
                          const Restriction& g);

// The operator as a callable; holds its own copy of the game and a cache.
Operator MakeOperator(const PropertyProfile& profile, const Game& game);

IterationTrace Outcome(const PropertyProfile& profile, const Game& game,
                       std::size_t budget = 0);

// Exhaustive check of "G <= G' and phi(s, G) implies phi(s, G')" for every
// player and strategy.
CheckReport CheckPropertyMonotone(const PropertySpec& spec, const Game& game,
                                  const Budget& budget = {});

// phi_i(s_i, ({s_1}, ..., {s_n})) for every joint strategy and player.
CheckReport CheckSingletonCondition(const PropertySpec& spec, const Game& game);

// br:g:pure outcome inside sd:l outcome, with the pointwise chain
// T_br:g(G) <= T_sd:g(G) <= T_sd:l(G) on every restriction.
CheckReport VerifyTheoremJust(const Game& game, const Budget& budget = {});

// br:g:corr outcome inside msd:l outcome, with the pointwise chain
// T_br:g(G) <= T_br:l(G) <= T_brc:l(G) = T_msd:l(G) on every restriction.
CheckReport VerifyTheoremJust1(const Game& game, const Budget& budget = {});

}  // namespace epigame

#endif  // EPIGAME_PROPERTY_HPP_
