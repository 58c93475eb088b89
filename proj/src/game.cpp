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

#include "epigame/game.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "epigame/errors.hpp"

namespace epigame {
namespace {

constexpr std::size_t kMaxStrategiesPerPlayer = 64;

bool IsNameToken(const std::string& s) {
  return !s.empty() && s.find_first_of(":#") == std::string::npos;
}

}  // namespace

Game::Game(std::string name, std::vector<std::vector<std::string>> strategy_names,
           std::vector<Rational> payoffs)
    : name_(std::move(name)),
      names_(std::move(strategy_names)),
      payoffs_(std::move(payoffs)) {
  if (names_.size() < 2) {
    throw ArgumentError("a game needs at least two players");
  }
  strides_.assign(names_.size(), 1);
  for (std::size_t i = names_.size(); i-- > 0;) {
    const auto& list = names_[i];
    if (list.empty()) {
      throw ArgumentError("player " + std::to_string(i + 1) +
                          " has no strategies");
    }
    if (list.size() > kMaxStrategiesPerPlayer) {
      throw ArgumentError("player " + std::to_string(i + 1) + " has more than " +
                          std::to_string(kMaxStrategiesPerPlayer) +
                          " strategies");
    }
    std::set<std::string> seen;
    for (const auto& s : list) {
      if (!IsNameToken(s)) {
        throw ArgumentError("invalid strategy name '" + s + "'");
      }
      if (!seen.insert(s).second) {
        throw ArgumentError("duplicate strategy name '" + s + "' for player " +
                            std::to_string(i + 1));
      }
    }
    strides_[i] = num_joint_;
    num_joint_ *= list.size();
  }
  if (payoffs_.size() != num_joint_ * names_.size()) {
    throw ArgumentError("payoff table has " + std::to_string(payoffs_.size()) +
                        " entries, expected " +
                        std::to_string(num_joint_ * names_.size()));
  }
  for (auto& q : payoffs_) q.canonicalize();
}

Game Game::FromFunction(
    std::string name, std::vector<std::vector<std::string>> strategy_names,
    const std::function<std::vector<Rational>(const JointStrategy&)>& payoff) {
  std::size_t joints = 1;
  for (const auto& list : strategy_names) joints *= list.size();
  const std::size_t n = strategy_names.size();
  std::vector<Rational> table;
  table.reserve(joints * n);
  JointStrategy joint(n, 0);
  for (std::size_t k = 0; k < joints; ++k) {
    std::size_t rest = k;
    for (std::size_t i = n; i-- > 0;) {
      joint[i] = rest % strategy_names[i].size();
      rest /= strategy_names[i].size();
    }
    auto values = payoff(joint);
    if (values.size() != n) {
      throw ArgumentError("payoff function returned the wrong arity");
    }
    for (auto& v : values) table.push_back(std::move(v));
  }
  return Game(std::move(name), std::move(strategy_names), std::move(table));
}

std::size_t Game::total_strategies() const {
  std::size_t total = 0;
  for (const auto& list : names_) total += list.size();
  return total;
}

std::size_t Game::max_strategies() const {
  std::size_t best = 0;
  for (const auto& list : names_) best = std::max(best, list.size());
  return best;
}

std::optional<StrategyIndex> Game::FindStrategy(PlayerIndex i,
                                                std::string_view name) const {
  const auto& list = names_.at(i);
  for (std::size_t s = 0; s < list.size(); ++s) {
    if (list[s] == name) return s;
  }
  return std::nullopt;
}

std::size_t Game::JointIndex(std::span<const StrategyIndex> joint) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < strides_.size(); ++i) {
    index += joint[i] * strides_[i];
  }
  return index;
}

JointStrategy Game::JointFromIndex(std::size_t index) const {
  JointStrategy joint(num_players());
  for (std::size_t i = 0; i < num_players(); ++i) {
    joint[i] = (index / strides_[i]) % names_[i].size();
  }
  return joint;
}

Game ParseGame(std::string_view text) {
  enum class Section { kHeader, kPayoffs, kDone };
  Section section = Section::kHeader;
  std::optional<std::string> name;
  std::optional<std::size_t> players;
  std::vector<std::optional<std::vector<std::string>>> strategies;
  std::vector<std::optional<std::vector<Rational>>> cells;
  std::vector<std::size_t> cell_lines;
  std::size_t end_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    if (section == Section::kDone) {
      throw ParseError(line_no, "content after 'end'");
    }
    if (section == Section::kHeader) {
      const std::string& kw = tok[0];
      if (kw == "game") {
        if (name) throw ParseError(line_no, "duplicate 'game' line");
        if (tok.size() != 2) throw ParseError(line_no, "expected 'game <name>'");
        name = tok[1];
      } else if (kw == "players") {
        if (!name) throw ParseError(line_no, "'players' before 'game'");
        if (players) throw ParseError(line_no, "duplicate 'players' line");
        std::size_t n = 0;
        if (tok.size() != 2 ||
            std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n)
                    .ec != std::errc{} ||
            std::to_string(n) != tok[1]) {
          throw ParseError(line_no, "expected 'players <n>'");
        }
        if (n < 2) throw ParseError(line_no, "a game needs at least 2 players");
        players = n;
        strategies.assign(n, std::nullopt);
      } else if (kw == "strategies") {
        if (!players) throw ParseError(line_no, "'strategies' before 'players'");
        std::size_t i = 0;
        if (tok.size() < 4 || tok[2] != ":" ||
            std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), i)
                    .ec != std::errc{} ||
            std::to_string(i) != tok[1]) {
          throw ParseError(line_no, "expected 'strategies <i> : <name>+'");
        }
        if (i < 1 || i > *players) {
          throw ParseError(line_no, "player index " + tok[1] + " out of range");
        }
        if (strategies[i - 1]) {
          throw ParseError(line_no, "strategies of player " + tok[1] +
                                        " declared twice");
        }
        std::vector<std::string> list(tok.begin() + 3, tok.end());
        std::set<std::string> seen;
        for (const auto& s : list) {
          if (!IsNameToken(s)) {
            throw ParseError(line_no, "invalid strategy name '" + s + "'");
          }
          if (!seen.insert(s).second) {
            throw ParseError(line_no, "duplicate strategy name '" + s + "'");
          }
        }
        if (list.size() > kMaxStrategiesPerPlayer) {
          throw ParseError(line_no, "too many strategies");
        }
        strategies[i - 1] = std::move(list);
      } else if (kw == "payoffs") {
        if (!players) throw ParseError(line_no, "'payoffs' before 'players'");
        if (tok.size() != 1) throw ParseError(line_no, "unexpected tokens");
        for (std::size_t i = 0; i < *players; ++i) {
          if (!strategies[i]) {
            throw ParseError(line_no, "missing strategies for player " +
                                          std::to_string(i + 1));
          }
        }
        std::size_t joints = 1;
        for (const auto& list : strategies) joints *= list->size();
        cells.assign(joints, std::nullopt);
        cell_lines.assign(joints, 0);
        section = Section::kPayoffs;
      } else {
        throw ParseError(line_no, "unknown keyword '" + kw + "'");
      }
      continue;
    }

    // Payoff section.
    if (tok.size() == 1 && tok[0] == "end") {
      section = Section::kDone;
      end_line = line_no;
      continue;
    }
    const std::size_t n = *players;
    if (tok.size() != 2 * n + 1 || tok[n] != ":") {
      throw ParseError(line_no, "expected " + std::to_string(n) +
                                    " strategy names, ':', and " +
                                    std::to_string(n) + " payoffs");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& list = *strategies[i];
      auto it = std::find(list.begin(), list.end(), tok[i]);
      if (it == list.end()) {
        throw ParseError(line_no, "unknown strategy '" + tok[i] +
                                      "' for player " + std::to_string(i + 1));
      }
      index = index * list.size() + static_cast<std::size_t>(it - list.begin());
    }
    if (cells[index]) {
      throw ParseError(line_no, "duplicate payoff cell (first given on line " +
                                    std::to_string(cell_lines[index]) + ")");
    }
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n; ++i) {
      auto q = ParseRational(tok[n + 1 + i]);
      if (!q) {
        throw ParseError(line_no, "malformed rational '" + tok[n + 1 + i] + "'");
      }
      values.push_back(*q);
    }
    cells[index] = std::move(values);
    cell_lines[index] = line_no;
  }

  if (section == Section::kHeader) {
    throw ParseError(line_no, name ? "missing 'payoffs' section"
                                   : "missing 'game' line");
  }
  if (section == Section::kPayoffs) {
    throw ParseError(line_no, "missing 'end'");
  }
  std::vector<std::vector<std::string>> names;
  for (auto& list : strategies) names.push_back(std::move(*list));
  std::vector<Rational> table;
  table.reserve(cells.size() * names.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!cells[k]) {
      std::string joint;
      std::size_t rest = k;
      std::vector<std::string> parts(names.size());
      for (std::size_t i = names.size(); i-- > 0;) {
        parts[i] = names[i][rest % names[i].size()];
        rest /= names[i].size();
      }
      for (const auto& p : parts) joint += (joint.empty() ? "" : " ") + p;
      throw ParseError(end_line, "missing payoff cell for (" + joint + ")");
    }
    for (auto& v : *cells[k]) table.push_back(std::move(v));
  }
  return Game(*name, std::move(names), std::move(table));
}

Game LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open game file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

std::string WriteGame(const Game& game) {
  std::ostringstream out;
  out << "game " << game.name() << "\n";
  out << "players " << game.num_players() << "\n";
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    out << "strategies " << i + 1 << " :";
    for (const auto& s : game.strategy_names(i)) out << ' ' << s;
    out << "\n";
  }
  out << "payoffs\n";
  for (std::size_t k = 0; k < game.num_joint(); ++k) {
    const auto joint = game.JointFromIndex(k);
    for (PlayerIndex i = 0; i < game.num_players(); ++i) {
      out << game.strategy_name(i, joint[i]) << ' ';
    }
    out << ':';
    for (PlayerIndex i = 0; i < game.num_players(); ++i) {
      out << ' ' << ToString(game.payoff(i, joint));
    }
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace epigame
