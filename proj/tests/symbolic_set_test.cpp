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

#include <random>
#include <vector>

#include "epigame/errors.hpp"
#include "epigame/symbolic_set.hpp"

namespace epigame {
namespace {

Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Endpoints of random sets are multiples of 1/2 in [0,4]; a quarter grid
// over a wider range separates any two distinct such sets.
std::vector<Rational> Grid() {
  std::vector<Rational> out;
  for (long k = -12; k <= 28; ++k) out.push_back(Q(k, 4));
  out.push_back(Q(-1000));
  out.push_back(Q(1000));
  return out;
}

SymbolicSet RandomSet(std::mt19937_64& rng) {
  SymbolicSet out;
  const int pieces = static_cast<int>(rng() % 4);
  for (int k = 0; k < pieces; ++k) {
    const long a = static_cast<long>(rng() % 9);
    const long b = a + static_cast<long>(rng() % 4);
    Endpoint lo = Endpoint::Finite(Q(a, 2), rng() % 2 == 0);
    Endpoint hi = Endpoint::Finite(Q(b, 2), rng() % 2 == 0);
    if (rng() % 10 == 0) lo = Endpoint::NegInf();
    if (rng() % 10 == 0) hi = Endpoint::PosInf();
    out = out.Union(SymbolicSet::Make(lo, hi));
  }
  if (rng() % 3 == 0) out = out.Union(SymbolicSet::Point(Q(static_cast<long>(rng() % 9), 2)));
  return out;
}

void ExpectCanonical(const SymbolicSet& s) {
  const auto& p = s.pieces();
  for (std::size_t k = 0; k < p.size(); ++k) {
    EXPECT_FALSE(p[k].IsEmpty());
    if (k == 0) continue;
    const Endpoint& prev = p[k - 1].hi;
    const Endpoint& next = p[k].lo;
    ASSERT_EQ(prev.infinity, 0);
    ASSERT_EQ(next.infinity, 0);
    // Strictly separated, or touching with both ends open.
    EXPECT_TRUE(prev.value < next.value ||
                (prev.value == next.value && !prev.closed && !next.closed))
        << s.ToString();
  }
}

TEST(SymbolicSetTest, PrintsCanonicalForms) {
  EXPECT_EQ(SymbolicSet::Empty().ToString(), "{}");
  EXPECT_EQ(SymbolicSet::Points({Q(2), Q(0), Q(1), Q(1)}).ToString(), "{0,1,2}");
  EXPECT_EQ(SymbolicSet::Closed(Q(0), Q(1, 2)).Union(SymbolicSet::Point(Q(2))).ToString(),
            "[0,1/2] U {2}");
  EXPECT_EQ(SymbolicSet::AtMost(Q(3), false).ToString(), "(-inf,3)");
  EXPECT_EQ(SymbolicSet::Everything().ToString(), "(-inf,+inf)");
  EXPECT_EQ(SymbolicSet::Closed(Q(0), Q(1)).Union(SymbolicSet::Closed(Q(1), Q(2))).ToString(),
            "[0,2]");
  EXPECT_EQ(SymbolicSet::Open(Q(0), Q(1)).Union(SymbolicSet::Point(Q(1))).ToString(), "(0,1]");
  EXPECT_EQ(SymbolicSet::Open(Q(0), Q(1)).Union(SymbolicSet::Open(Q(1), Q(2))).ToString(),
            "(0,1) U (1,2)");
  EXPECT_TRUE(SymbolicSet::Open(Q(1), Q(1)).empty());
  EXPECT_TRUE(SymbolicSet::Closed(Q(2), Q(1)).empty());
}

TEST(SymbolicSetTest, ParseRoundTripAndErrors) {
  for (const char* text : {"{}", "{0,1,2}", "[0,1/2] U {2}", "(-inf,3)", "(-inf,+inf)",
                           "(0,1) U (1,2)", "[-3/2,-1) U [4,+inf)"}) {
    EXPECT_EQ(ParseSymbolicSet(text).ToString(), text);
  }
  EXPECT_EQ(ParseSymbolicSet("[0,1] U [1,2]"), SymbolicSet::Closed(Q(0), Q(2)));
  for (const char* bad : {"", "[0,1", "(0;1)", "{a}", "[-inf,0]", "(1,+inf]", "[0,1] U"}) {
    EXPECT_THROW(ParseSymbolicSet(bad), ArgumentError) << bad;
  }
}

TEST(SymbolicSetTest, SetAlgebraMatchesMembershipOracle) {
  std::mt19937_64 rng(42);
  const auto grid = Grid();
  for (int trial = 0; trial < 2000; ++trial) {
    const SymbolicSet a = RandomSet(rng);
    const SymbolicSet b = RandomSet(rng);
    const SymbolicSet u = a.Union(b);
    const SymbolicSet i = a.Intersect(b);
    const SymbolicSet d = a.Difference(b);
    const SymbolicSet c = a.Complement();
    for (const auto& s : {a, b, u, i, d, c}) ExpectCanonical(s);
    bool subset = true;
    bool finite_points = true;
    for (const Rational& x : grid) {
      const bool ia = a.Contains(x);
      const bool ib = b.Contains(x);
      ASSERT_EQ(u.Contains(x), ia || ib) << a.ToString() << " | " << b.ToString();
      ASSERT_EQ(i.Contains(x), ia && ib) << a.ToString() << " & " << b.ToString();
      ASSERT_EQ(d.Contains(x), ia && !ib) << a.ToString() << " - " << b.ToString();
      ASSERT_EQ(c.Contains(x), !ia) << a.ToString();
      if (ia && !ib) subset = false;
    }
    for (const auto& piece : a.pieces()) finite_points = finite_points && piece.IsPoint();
    EXPECT_EQ(a.IsSubsetOf(b), subset) << a.ToString() << " <= " << b.ToString();
    EXPECT_EQ(a.IsFinitePointSet(), finite_points);
    // Canonical form makes equal sets structurally equal.
    EXPECT_EQ(u, b.Union(a));
    EXPECT_EQ(a, i.Union(d));
    EXPECT_EQ(c.Complement(), a);
    EXPECT_EQ(ParseSymbolicSet(a.ToString()), a);
    if (a.empty()) {
      EXPECT_FALSE(a.AnyPoint().has_value());
    } else {
      ASSERT_TRUE(a.AnyPoint().has_value());
      EXPECT_TRUE(a.Contains(*a.AnyPoint()));
      for (const Rational& x : a.ProbePoints(5)) EXPECT_TRUE(a.Contains(x)) << a.ToString();
    }
  }
}

TEST(SymbolicSetTest, ScaleMatchesMembership) {
  std::mt19937_64 rng(5);
  const auto grid = Grid();
  for (int trial = 0; trial < 500; ++trial) {
    const SymbolicSet a = RandomSet(rng);
    for (const Rational& k : {Q(2), Q(1, 3), Q(-1), Q(-5, 2)}) {
      const SymbolicSet scaled = a.Scale(k);
      ExpectCanonical(scaled);
      for (const Rational& y : grid) {
        const Rational x = k * y;
        ASSERT_EQ(scaled.Contains(x), a.Contains(y)) << a.ToString() << " * " << k;
      }
    }
  }
  EXPECT_EQ(SymbolicSet::Closed(Q(0), Q(1)).Scale(Q(0)), SymbolicSet::Point(Q(0)));
  EXPECT_TRUE(SymbolicSet::Empty().Scale(Q(0)).empty());
}

TEST(SymbolicSetTest, BoundsAndAccumulation) {
  std::mt19937_64 rng(8);
  const auto grid = Grid();
  const Rational tiny = Q(1, 1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const SymbolicSet a = RandomSet(rng);
    for (const Rational& x : grid) {
      EXPECT_EQ(a.AccumulatesFromRightAt(x), a.Contains(x + tiny)) << a.ToString() << " at " << x;
    }
    if (a.empty()) continue;
    const Endpoint sup = a.Supremum();
    const Endpoint inf = a.Infimum();
    EXPECT_EQ(sup, a.pieces().back().hi);
    EXPECT_EQ(inf, a.pieces().front().lo);
    for (const Rational& x : grid) {
      if (!a.Contains(x)) continue;
      if (sup.infinity == 0) EXPECT_LE(x, sup.value);
      if (inf.infinity == 0) EXPECT_GE(x, inf.value);
    }
  }
  const SymbolicSet half = SymbolicSet::Closed(Q(0), Q(1, 2)).Union(SymbolicSet::Point(Q(2)));
  EXPECT_TRUE(half.AccumulatesFromRightAt(Q(0)));
  EXPECT_FALSE(half.AccumulatesFromRightAt(Q(1, 2)));
  EXPECT_FALSE(half.AccumulatesFromRightAt(Q(2)));
}

TEST(SymbolicRestrictionTest, OrderAndPrinting) {
  const SymbolicRestriction big{SymbolicSet::Closed(Q(0), Q(1)),
                                SymbolicSet::Closed(Q(0), Q(1)).Union(SymbolicSet::Point(Q(2)))};
  const SymbolicRestriction small{SymbolicSet::Point(Q(0)), SymbolicSet::Points({Q(0), Q(2)})};
  EXPECT_TRUE(SymbolicLeq(small, big));
  EXPECT_FALSE(SymbolicLeq(big, small));
  EXPECT_TRUE(SymbolicLeq(big, big));
  EXPECT_EQ(ToString(small), "({0}; {0,2})");
}

}  // namespace
}  // namespace epigame
