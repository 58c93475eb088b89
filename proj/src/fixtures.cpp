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

#include "epigame/fixtures.hpp"

#include <utility>

namespace epigame {
namespace {

Game Bimatrix(std::string name, std::vector<std::string> rows,
              std::vector<std::string> cols,
              const std::vector<std::vector<std::pair<int, int>>>& cells) {
  std::vector<Rational> table;
  for (const auto& row : cells) {
    for (const auto& [a, b] : row) {
      table.emplace_back(a);
      table.emplace_back(b);
    }
  }
  return Game(std::move(name), {std::move(rows), std::move(cols)},
              std::move(table));
}

}  // namespace

Game FixturePD() {
  return Bimatrix("pd", {"C", "D"}, {"C", "D"},
                  {{{2, 2}, {0, 3}}, {{3, 0}, {1, 1}}});
}

Game FixtureMP() {
  return Bimatrix("mp", {"H", "T"}, {"H", "T"},
                  {{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
}

Game FixtureMix() {
  return Bimatrix("mix", {"T", "M", "B"}, {"L", "R"},
                  {{{3, 0}, {0, 0}}, {{0, 0}, {3, 0}}, {{1, 0}, {1, 0}}});
}

Game FixtureChain() {
  return Bimatrix("chain", {"T", "M", "B"}, {"L", "C", "R"},
                  {{{4, 3}, {5, 1}, {6, 2}},
                   {{2, 1}, {8, 4}, {3, 6}},
                   {{3, 0}, {9, 6}, {2, 8}}});
}

std::vector<Game> AllFixtures() {
  return {FixturePD(), FixtureMP(), FixtureMix(), FixtureChain()};
}

std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

Game RandomGame(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                int lo, int hi) {
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  for (std::size_t r = 0; r < rows; ++r) row_names.push_back("r" + std::to_string(r + 1));
  for (std::size_t c = 0; c < cols; ++c) col_names.push_back("c" + std::to_string(c + 1));
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  std::vector<Rational> table;
  for (std::size_t k = 0; k < rows * cols * 2; ++k) {
    table.emplace_back(lo + static_cast<long>(UniformIndex(rng, span)));
  }
  return Game("random_" + std::to_string(rows) + "x" + std::to_string(cols),
              {std::move(row_names), std::move(col_names)}, std::move(table));
}

std::vector<Game> RandomGamePool(std::uint64_t seed, std::size_t count,
                                 std::size_t max_rows, std::size_t max_cols) {
  std::mt19937_64 rng(seed);
  std::vector<Game> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t rows = 2 + UniformIndex(rng, max_rows - 1);
    const std::size_t cols = 2 + UniformIndex(rng, max_cols - 1);
    out.push_back(RandomGame(rng, rows, cols));
  }
  return out;
}

Restriction RandomRestriction(const Game& game, std::mt19937_64& rng) {
  std::vector<StrategySet> sets;
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    const std::uint64_t full = StrategySet::Full(game.num_strategies(i)).bits();
    sets.emplace_back(rng() & full);
  }
  return Restriction(std::move(sets));
}

}  // namespace epigame
