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

#include <optional>
#include <random>
#include <vector>

#include "epigame/lp.hpp"

namespace epigame {
namespace {

LinearConstraint Row(std::vector<int> a, Relation rel, int b) {
  LinearConstraint c;
  for (int v : a) c.coefficients.emplace_back(v);
  c.relation = rel;
  c.rhs = b;
  return c;
}

TEST(LpTest, TextbookOptimum) {
  // max 3x + 5y  s.t. x <= 4, 2y <= 12, 3x + 2y <= 18.
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(3), Rational(5)};
  lp.constraints = {Row({1, 0}, Relation::kLessEqual, 4),
                    Row({0, 2}, Relation::kLessEqual, 12),
                    Row({3, 2}, Relation::kLessEqual, 18)};
  const auto sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.value, Rational(36));
  EXPECT_EQ(sol.x[0], Rational(2));
  EXPECT_EQ(sol.x[1], Rational(6));
}

TEST(LpTest, FractionalOptimumIsExact) {
  // max x + y  s.t. 3x + y <= 2, x + 3y <= 2.
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.constraints = {Row({3, 1}, Relation::kLessEqual, 2), Row({1, 3}, Relation::kLessEqual, 2)};
  const auto sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.value, Rational(1));
  EXPECT_EQ(sol.x[0], Rational(1, 2));
}

TEST(LpTest, Infeasible) {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {Rational(1)};
  lp.constraints = {Row({1}, Relation::kGreaterEqual, 3), Row({1}, Relation::kLessEqual, 2)};
  EXPECT_EQ(SolveLinearProgram(lp).status, LpStatus::kInfeasible);
}

TEST(LpTest, Unbounded) {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(0)};
  lp.constraints = {Row({1, -1}, Relation::kGreaterEqual, 0)};
  EXPECT_EQ(SolveLinearProgram(lp).status, LpStatus::kUnbounded);
}

TEST(LpTest, EqualityAndNegativeRhs) {
  // max -x - y  s.t. x + y = 1, -x <= -1/2 (x >= 1/2).
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(-1), Rational(-2)};
  lp.constraints = {Row({1, 1}, Relation::kEqual, 1), Row({-1, 0}, Relation::kLessEqual, 0)};
  lp.constraints[1].rhs = Rational(-1, 2);
  const auto sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.value, Rational(-1));
  EXPECT_EQ(sol.x[0], Rational(1));
}

TEST(LpTest, DegenerateRedundantEqualities) {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.constraints = {Row({1, 1}, Relation::kEqual, 1), Row({2, 2}, Relation::kEqual, 2),
                    Row({1, 0}, Relation::kLessEqual, 1)};
  const auto sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.value, Rational(1));
}

// Oracle: enumerate every basic point (n tight constraints among rows and
// nonnegativity bounds), keep the feasible ones, take the best.
std::optional<std::vector<Rational>> SolveSquare(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<Rational> VertexOracle(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) {
    rows.push_back(c.coefficients);
    rhs.push_back(c.rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    rows.push_back(e);
    rhs.emplace_back(0);
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (auto v : x) {
      if (v < 0) return false;
    }
    for (const auto& c : lp.constraints) {
      Rational lhs(0);
      for (std::size_t j = 0; j < n; ++j) lhs += c.coefficients[j] * x[j];
      if (c.relation == Relation::kLessEqual && lhs > c.rhs) return false;
      if (c.relation == Relation::kGreaterEqual && lhs < c.rhs) return false;
      if (c.relation == Relation::kEqual && lhs != c.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  const std::size_t m = rows.size();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t r = 0; r < m; ++r) {
      if ((mask >> r) & 1U) {
        a.push_back(rows[r]);
        b.push_back(rhs[r]);
      }
    }
    const auto x = SolveSquare(a, b);
    if (!x || !feasible(*x)) continue;
    Rational value(0);
    for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * (*x)[j];
    if (!best || value > *best) best = value;
  }
  return best;
}

TEST(LpTest, MatchesVertexEnumerationOnRandomBoundedPrograms) {
  std::mt19937_64 rng(7);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp;
    lp.num_vars = 2 + trial % 2;
    for (std::size_t j = 0; j < lp.num_vars; ++j) lp.objective.emplace_back(draw(-4, 6));
    const int rows = draw(1, 4);
    for (int r = 0; r < rows; ++r) {
      LinearConstraint c;
      for (std::size_t j = 0; j < lp.num_vars; ++j) c.coefficients.emplace_back(draw(-3, 5));
      const int kind = draw(0, 5);
      c.relation = kind < 4 ? Relation::kLessEqual
                            : (kind == 4 ? Relation::kGreaterEqual : Relation::kEqual);
      c.rhs = draw(-2, 9);
      lp.constraints.push_back(c);
    }
    // Keep the feasible region bounded.
    LinearConstraint box;
    box.coefficients.assign(lp.num_vars, Rational(1));
    box.rhs = 20;
    lp.constraints.push_back(box);

    const auto sol = SolveLinearProgram(lp);
    const auto oracle = VertexOracle(lp);
    ASSERT_NE(sol.status, LpStatus::kUnbounded) << "trial " << trial;
    if (!oracle) {
      EXPECT_EQ(sol.status, LpStatus::kInfeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(sol.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_EQ(sol.value, *oracle) << "trial " << trial;
    ++optimal;
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 5);
}

}  // namespace
}  // namespace epigame
