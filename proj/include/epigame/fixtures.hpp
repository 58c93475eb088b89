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

#ifndef EPIGAME_FIXTURES_HPP_
#define EPIGAME_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "epigame/game.hpp"
#include "epigame/restriction.hpp"

namespace epigame {

// Prisoner's dilemma over {C,D}.
Game FixturePD();
// Matching pennies over {H,T}.
Game FixtureMP();
// Row {T,M,B} x column {L,R}; B is dominated only by a mixture of T and M.
Game FixtureMix();
// Row {T,M,B} x column {L,C,R}; local pure elimination takes three rounds.
Game FixtureChain();

// The four above, in that order.
std::vector<Game> AllFixtures();

// Bimatrix game with integer payoffs drawn uniformly from [lo, hi].
// Strategies are named r1.. and c1...
Game RandomGame(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                int lo = -5, int hi = 5);

// `count` games with shapes drawn from [2, max_rows] x [2, max_cols].
std::vector<Game> RandomGamePool(std::uint64_t seed, std::size_t count,
                                 std::size_t max_rows, std::size_t max_cols);

// Every component drawn as a uniformly random subset (possibly empty).
Restriction RandomRestriction(const Game& game, std::mt19937_64& rng);

// Uniform draw from [0, n); portable across standard libraries.
std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t n);

}  // namespace epigame

#endif  // EPIGAME_FIXTURES_HPP_
