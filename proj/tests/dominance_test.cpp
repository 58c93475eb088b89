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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "epigame/dominance.hpp"
#include "epigame/errors.hpp"
#include "epigame/fixtures.hpp"
#include "epigame/game.hpp"
#include "test_support.hpp"

namespace epigame {
namespace {

using testing::FixturePath;
using testing::R;

constexpr PlayerIndex kRow = 0;
constexpr PlayerIndex kCol = 1;

TEST(StrictDominanceTest, Examples) {
  const Game pd = FixturePD();
  const Game mix = FixtureMix();
  EXPECT_TRUE(StrictlyDominatesPure(pd, RestrictionTop(pd), kRow, 1, 0));
  EXPECT_FALSE(StrictlyDominatesPure(pd, RestrictionTop(pd), kRow, 0, 1));
  EXPECT_FALSE(StrictlyDominatesPure(mix, RestrictionTop(mix), kRow, 0, 2));
  // Empty opponent set: vacuous.
  const Restriction no_cols = R(mix, {{"T", "M", "B"}, {}});
  EXPECT_TRUE(StrictlyDominatesPure(mix, no_cols, kRow, 0, 2));
  EXPECT_TRUE(StrictlyDominatesPure(mix, no_cols, kRow, 2, 2));
}

TEST(StrictDominanceTest, UnknownStrategyIsArgumentError) {
  const Game pd = FixturePD();
  EXPECT_THROW(StrictlyDominatesPure(pd, RestrictionTop(pd), kRow, 5, 0), ArgumentError);
}

TEST(StrictDominanceTest, AntiSymmetricWhenOpponentsExist) {
  const auto pool = RandomGamePool(11, 40, 4, 4);
  std::mt19937_64 rng(3);
  for (const Game& g : pool) {
    for (int k = 0; k < 10; ++k) {
      const Restriction ctx = RandomRestriction(g, rng);
      for (PlayerIndex i = 0; i < 2; ++i) {
        if (ctx.OpponentCount(i) == 0) continue;
        for (StrategyIndex a = 0; a < g.num_strategies(i); ++a) {
          for (StrategyIndex b = 0; b < g.num_strategies(i); ++b) {
            EXPECT_FALSE(StrictlyDominatesPure(g, ctx, i, a, b) &&
                         StrictlyDominatesPure(g, ctx, i, b, a));
          }
        }
      }
    }
  }
}

TEST(MixedDominanceTest, MixWitnessIsValid) {
  const Game mix = FixtureMix();
  const Restriction top = RestrictionTop(mix);
  const auto w = MixedDominanceWitness(mix, top, kRow, StrategySet(0b011), 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->IsValid(StrategySet(0b011)));
  EXPECT_TRUE(MixtureStrictlyDominates(mix, top, kRow, *w, 2));
  // Any valid witness puts weight strictly between 1/3 and 2/3 on T.
  Rational t_weight(0);
  for (const auto& [s, p] : w->weights) {
    if (s == 0) t_weight = p;
  }
  EXPECT_GT(t_weight, Rational(1, 3));
  EXPECT_LT(t_weight, Rational(2, 3));
}

TEST(MixedDominanceTest, NoWitnessCases) {
  const Game pd = FixturePD();
  const Game mix = FixtureMix();
  EXPECT_FALSE(MixedDominanceWitness(pd, RestrictionTop(pd), kRow, StrategySet(0b11), 1));
  EXPECT_FALSE(MixedDominanceWitness(mix, RestrictionTop(mix), kRow, StrategySet(0b100), 2));
  EXPECT_FALSE(MixedDominanceWitness(mix, RestrictionTop(mix), kRow, StrategySet(0), 2));
}

TEST(MixedDominanceTest, EmptyOpponentsGivesUniformMixture) {
  const Game mix = FixtureMix();
  const Restriction ctx = R(mix, {{"T", "M", "B"}, {}});
  const auto w = MixedDominanceWitness(mix, ctx, kRow, StrategySet(0b011), 2);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->weights.size(), 2U);
  EXPECT_EQ(w->weights[0].second, Rational(1, 2));
  EXPECT_EQ(w->weights[1].second, Rational(1, 2));
}

TEST(MixedDominanceTest, MixedStrategyValidity) {
  MixedStrategy m{0, {{0, Rational(1, 3)}, {1, Rational(2, 3)}}};
  EXPECT_TRUE(m.IsValid(StrategySet(0b11)));
  EXPECT_FALSE(m.IsValid(StrategySet(0b01)));
  MixedStrategy short_sum{0, {{0, Rational(1, 3)}}};
  EXPECT_FALSE(short_sum.IsValid(StrategySet(0b11)));
  MixedStrategy negative{0, {{0, Rational(-1)}, {1, Rational(2)}}};
  EXPECT_FALSE(negative.IsValid(StrategySet(0b11)));
}

// Exact oracle: is there p in [0,1] with a_k p + b_k > 0 for every k? The
// feasible set is an interval whose ends are among 0, 1 and the roots, so
// it is nonempty iff it contains a candidate or a midpoint of two of them.
bool UnitIntervalFeasible(const std::vector<std::pair<Rational, Rational>>& rows,
                          bool strict) {
  std::vector<Rational> cands{Rational(0), Rational(1)};
  for (const auto& [a, b] : rows) {
    if (a != 0) {
      const Rational root = -b / a;
      if (root > 0 && root < 1) cands.push_back(root);
    }
  }
  std::sort(cands.begin(), cands.end());
  const std::size_t base = cands.size();
  for (std::size_t k = 0; k + 1 < base; ++k) cands.push_back((cands[k] + cands[k + 1]) / 2);
  for (const Rational& p : cands) {
    bool ok = true;
    for (const auto& [a, b] : rows) {
      const Rational v = a * p + b;
      if (strict ? v <= 0 : v < 0) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

TEST(MixedDominanceTest, MatchesTwoStrategyPoolOracle) {
  const auto pool = RandomGamePool(5, 120, 4, 4);
  std::mt19937_64 rng(9);
  int found = 0;
  for (const Game& g : pool) {
    const Restriction ctx = RandomRestriction(g, rng);
    for (PlayerIndex i = 0; i < 2; ++i) {
      const auto opps = OpponentProfiles(ctx, i);
      if (opps.empty()) continue;
      const std::size_t n = g.num_strategies(i);
      for (StrategyIndex a = 0; a < n; ++a) {
        for (StrategyIndex b = a + 1; b < n; ++b) {
          for (StrategyIndex s = 0; s < n; ++s) {
            std::vector<std::pair<Rational, Rational>> rows;
            for (JointStrategy joint : opps) {
              joint[i] = a;
              const Rational pa = g.payoff(i, joint);
              joint[i] = b;
              const Rational pb = g.payoff(i, joint);
              joint[i] = s;
              const Rational ps = g.payoff(i, joint);
              rows.emplace_back(pa - pb, pb - ps);
            }
            const bool expected = UnitIntervalFeasible(rows, true);
            const StrategySet pool_set(std::uint64_t{1} << a | std::uint64_t{1} << b);
            const auto w = MixedDominanceWitness(g, ctx, i, pool_set, s);
            ASSERT_EQ(w.has_value(), expected) << WriteGame(g) << ctx.ToString(g);
            if (w) {
              ++found;
              EXPECT_TRUE(w->IsValid(pool_set));
              EXPECT_TRUE(MixtureStrictlyDominates(g, ctx, i, *w, s));
            }
          }
        }
      }
    }
  }
  EXPECT_GT(found, 20);
}

TEST(MixedDominanceTest, PoolMonotoneAndImpliedByPureDominance) {
  const auto pool = RandomGamePool(21, 60, 4, 4);
  std::mt19937_64 rng(4);
  for (const Game& g : pool) {
    const Restriction ctx = RandomRestriction(g, rng);
    for (PlayerIndex i = 0; i < 2; ++i) {
      const std::size_t n = g.num_strategies(i);
      const StrategySet full = StrategySet::Full(n);
      for (StrategyIndex s = 0; s < n; ++s) {
        for (std::uint64_t bits = 1; bits <= full.bits(); ++bits) {
          const StrategySet small(bits);
          if (MixedDominanceWitness(g, ctx, i, small, s)) {
            EXPECT_TRUE(MixedDominanceWitness(g, ctx, i, full, s).has_value());
          }
        }
        for (StrategyIndex d = 0; d < n; ++d) {
          if (StrictlyDominatesPure(g, ctx, i, d, s)) {
            EXPECT_TRUE(MixedDominanceWitness(g, ctx, i, StrategySet::Single(d), s));
          }
        }
      }
    }
  }
}

TEST(BestResponseTest, Examples) {
  const Game mp = FixtureMP();
  const Game pd = FixturePD();
  const Game mix = FixtureMix();
  EXPECT_TRUE(IsBestResponse(mp, RestrictionTop(mp), StrategySet(0b11), kRow, 0,
                             PointBelief{{0, 0}}));
  EXPECT_FALSE(IsBestResponse(pd, RestrictionTop(pd), StrategySet(0b11), kRow, 0,
                              PointBelief{{0, 0}}));
  CorrelatedBelief half{{{{0, 0}, Rational(1, 2)}, {{0, 1}, Rational(1, 2)}}};
  EXPECT_FALSE(IsBestResponse(mix, RestrictionTop(mix), StrategySet(0b111), kRow, 2, half));
  EXPECT_EQ(ExpectedPayoff(mix, kRow, 0, half), Rational(3, 2));
  EXPECT_EQ(ExpectedPayoff(mix, kRow, 2, half), Rational(1));
}

TEST(BestResponseTest, BeliefOutsideContextIsArgumentError) {
  const Game pd = FixturePD();
  const Restriction ctx = R(pd, {{"C", "D"}, {"D"}});
  EXPECT_THROW(IsBestResponse(pd, ctx, StrategySet(0b11), kRow, 1, PointBelief{{0, 0}}),
               ArgumentError);
}

TEST(BestResponseTest, IndependentBeliefsNeedTwoPlayers) {
  const Game three = LoadGameFile(FixturePath("3p.game"));
  const Restriction top = RestrictionTop(three);
  EXPECT_THROW(ExistsSupportingBelief(three, top, StrategySet(0b11), 0, 0,
                                      BeliefKind::kIndependentMixed),
               UnsupportedConfiguration);
  const Game pd = FixturePD();
  // Two players: handled on the correlated path.
  EXPECT_TRUE(ExistsSupportingBelief(pd, RestrictionTop(pd), StrategySet(0b11), kRow, 1,
                                     BeliefKind::kIndependentMixed));
  EXPECT_FALSE(ExistsSupportingBelief(pd, RestrictionTop(pd), StrategySet(0b11), kRow, 0,
                                      BeliefKind::kIndependentMixed));
}

TEST(SupportingBeliefTest, Examples) {
  const Game mp = FixtureMP();
  const Game mix = FixtureMix();
  const auto b = ExistsSupportingBelief(mp, RestrictionTop(mp), StrategySet(0b11), kRow, 1,
                                        BeliefKind::kPurePoint);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(KindOf(*b), BeliefKind::kPurePoint);
  EXPECT_TRUE(IsBestResponse(mp, RestrictionTop(mp), StrategySet(0b11), kRow, 1, *b));

  EXPECT_FALSE(ExistsSupportingBelief(mix, RestrictionTop(mix), StrategySet(0b111), kRow, 2,
                                      BeliefKind::kCorrelated));
  // Singleton pool: some belief whenever the opponents have a strategy.
  EXPECT_TRUE(ExistsSupportingBelief(mix, RestrictionTop(mix), StrategySet(0b100), kRow, 2,
                                     BeliefKind::kCorrelated));
  const Restriction no_cols = R(mix, {{"T", "M", "B"}, {}});
  EXPECT_FALSE(ExistsSupportingBelief(mix, no_cols, StrategySet(0b100), kRow, 2,
                                      BeliefKind::kCorrelated));
  EXPECT_FALSE(ExistsSupportingBelief(mix, no_cols, StrategySet(0b100), kRow, 2,
                                      BeliefKind::kPurePoint));
}

TEST(SupportingBeliefTest, MatchesTwoProfileOracle) {
  // Column player restricted to two strategies: a correlated belief is a
  // single weight q on the first one.
  const auto pool = RandomGamePool(8, 150, 4, 4);
  std::mt19937_64 rng(2);
  int supported = 0;
  for (const Game& g : pool) {
    Restriction ctx = RestrictionTop(g);
    const std::size_t cols = g.num_strategies(kCol);
    const StrategyIndex c0 = UniformIndex(rng, cols);
    StrategyIndex c1 = UniformIndex(rng, cols - 1);
    if (c1 >= c0) ++c1;
    ctx[kCol] = StrategySet(std::uint64_t{1} << c0 | std::uint64_t{1} << c1);
    const StrategySet pool_set = RandomRestriction(g, rng)[kRow] | StrategySet::Single(0);
    for (StrategyIndex s = 0; s < g.num_strategies(kRow); ++s) {
      std::vector<std::pair<Rational, Rational>> rows;
      for (StrategyIndex t : pool_set.members()) {
        const Rational d0 = g.payoff(kRow, JointStrategy{s, c0}) - g.payoff(kRow, JointStrategy{t, c0});
        const Rational d1 = g.payoff(kRow, JointStrategy{s, c1}) - g.payoff(kRow, JointStrategy{t, c1});
        rows.emplace_back(d0 - d1, d1);
      }
      const bool expected = UnitIntervalFeasible(rows, false);
      const auto b = ExistsSupportingBelief(g, ctx, pool_set, kRow, s, BeliefKind::kCorrelated);
      ASSERT_EQ(b.has_value(), expected) << WriteGame(g);
      if (b) {
        ++supported;
        EXPECT_TRUE(IsBestResponse(g, ctx, pool_set, kRow, s, *b));
      }
    }
  }
  EXPECT_GT(supported, 50);
}

TEST(SupportingBeliefTest, PurePointMatchesEnumeration) {
  const auto pool = RandomGamePool(13, 60, 4, 4);
  std::mt19937_64 rng(6);
  for (const Game& g : pool) {
    const Restriction ctx = RandomRestriction(g, rng);
    for (PlayerIndex i = 0; i < 2; ++i) {
      const StrategySet pool_set = StrategySet::Full(g.num_strategies(i));
      for (StrategyIndex s = 0; s < g.num_strategies(i); ++s) {
        bool expected = false;
        for (const auto& opp : OpponentProfiles(ctx, i)) {
          if (IsBestResponse(g, ctx, pool_set, i, s, PointBelief{opp})) expected = true;
        }
        EXPECT_EQ(ExistsSupportingBelief(g, ctx, pool_set, i, s, BeliefKind::kPurePoint)
                      .has_value(),
                  expected);
      }
    }
  }
}

TEST(PearceTest, FixtureExamples) {
  const Game mix = FixtureMix();
  const CheckReport r = PearceEquivalenceCheck(mix, RestrictionTop(mix));
  EXPECT_TRUE(r.passed()) << r.ToJson().dump(2);
  const Game pd = FixturePD();
  EXPECT_TRUE(PearceEquivalenceCheck(pd, RestrictionTop(pd)).passed());
}

TEST(PearceTest, EveryRestrictionOfEveryFixture) {
  for (const Game& g : AllFixtures()) {
    for (const Restriction& r : testing::AllRestrictions(g)) {
      const CheckReport rep = PearceEquivalenceCheck(g, r);
      ASSERT_TRUE(rep.passed()) << g.name() << " " << r.ToString(g) << rep.ToJson().dump();
    }
  }
}

TEST(PearceTest, RandomGamesAndRestrictions) {
  const auto pool = RandomGamePool(17, 30, 4, 4);
  std::mt19937_64 rng(17);
  for (const Game& g : pool) {
    for (int k = 0; k < 10; ++k) {
      const Restriction r = RandomRestriction(g, rng);
      ASSERT_TRUE(PearceEquivalenceCheck(g, r).passed()) << WriteGame(g) << r.ToString(g);
    }
  }
}

TEST(DominanceJsonTest, WitnessesRender) {
  const Game mix = FixtureMix();
  MixedStrategy m{0, {{0, Rational(1, 2)}, {1, Rational(1, 2)}}};
  const Json j = MixedStrategyToJson(mix, m);
  EXPECT_EQ(j.dump(), R"({"player":1,"weights":{"T":"1/2","M":"1/2"}})") << j.dump();
}

}  // namespace
}  // namespace epigame
