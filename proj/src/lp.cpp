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

#include "epigame/lp.hpp"

#include <limits>
#include <optional>

#include "epigame/errors.hpp"

namespace epigame {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in canonical form with respect to `basis`.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  // Maximizes cost . x over columns with allowed[c]. Returns false when the
  // objective is unbounded.
  bool Optimize(const std::vector<Rational>& cost,
                const std::vector<bool>& allowed) {
    PriceOut(cost);
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < num_cols(); ++c) {
        if (allowed[c] && sgn(reduced_[c]) > 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < num_rows(); ++r) {
        if (sgn(rows_[r][enter]) <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      Pivot(leave, enter);
    }
  }

  const Rational& value() const { return value_; }

  void Pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < num_rows(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t k = 0; k < num_cols(); ++k) {
        if (sgn(rows_[r][k]) != 0) rows_[i][k] -= f * rows_[r][k];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (!reduced_.empty() && sgn(reduced_[c]) != 0) {
      const Rational f = reduced_[c];
      for (std::size_t k = 0; k < num_cols(); ++k) {
        if (sgn(rows_[r][k]) != 0) reduced_[k] -= f * rows_[r][k];
      }
      value_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  void DropRow(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  // reduced_c = cost_c - sum_r cost_{basis r} * a_{r,c}
  void PriceOut(const std::vector<Rational>& cost) {
    reduced_ = cost;
    value_ = 0;
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t k = 0; k < num_cols(); ++k) {
        if (sgn(rows_[r][k]) != 0) reduced_[k] -= cb * rows_[r][k];
      }
      value_ += cb * rhs_[r];
    }
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational value_;
};

}  // namespace

LpSolution SolveLinearProgram(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) {
    throw ArgumentError("objective length does not match variable count");
  }
  const std::size_t m = lp.constraints.size();

  // Column layout: originals, one slack/surplus per inequality, one
  // artificial per row that lacks an obvious basic column.
  std::size_t slack_count = 0;
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) {
      throw ArgumentError("constraint length does not match variable count");
    }
    if (c.relation != Relation::kEqual) ++slack_count;
  }
  std::vector<Relation> relation(m);
  std::vector<bool> flipped(m, false);
  std::size_t artificial_count = 0;
  for (std::size_t r = 0; r < m; ++r) {
    relation[r] = lp.constraints[r].relation;
    if (sgn(lp.constraints[r].rhs) < 0) {
      flipped[r] = true;
      if (relation[r] == Relation::kLessEqual) {
        relation[r] = Relation::kGreaterEqual;
      } else if (relation[r] == Relation::kGreaterEqual) {
        relation[r] = Relation::kLessEqual;
      }
    }
    if (relation[r] != Relation::kLessEqual) ++artificial_count;
  }
  const std::size_t cols = n + slack_count + artificial_count;
  const std::size_t first_artificial = n + slack_count;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(cols));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n;
  std::size_t next_art = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    for (std::size_t k = 0; k < n; ++k) {
      rows[r][k] = flipped[r] ? Rational(-c.coefficients[k]) : c.coefficients[k];
    }
    rhs[r] = flipped[r] ? Rational(-c.rhs) : c.rhs;
    if (c.relation != Relation::kEqual) {
      // The slack sign follows the original relation, negated by the flip.
      const bool less = c.relation == Relation::kLessEqual;
      rows[r][next_slack] = (less != flipped[r]) ? 1 : -1;
      if (relation[r] == Relation::kLessEqual) basis[r] = next_slack;
      ++next_slack;
    }
    if (relation[r] != Relation::kLessEqual) {
      rows[r][next_art] = 1;
      basis[r] = next_art++;
    }
  }

  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  if (artificial_count > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t k = first_artificial; k < cols; ++k) phase1[k] = -1;
    std::vector<bool> all(cols, true);
    tab.Optimize(phase1, all);
    if (sgn(tab.value()) < 0) return {LpStatus::kInfeasible, 0, {}};
    // Drive zero-level artificials out of the basis or drop redundant rows.
    for (std::size_t r = 0; r < tab.num_rows();) {
      if (tab.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t k = 0; k < first_artificial; ++k) {
        if (sgn(tab.at(r, k)) != 0) {
          col = k;
          break;
        }
      }
      if (col == kNone) {
        tab.DropRow(r);
      } else {
        tab.Pivot(r, col);
        ++r;
      }
    }
  }

  std::vector<Rational> cost(cols);
  for (std::size_t k = 0; k < n; ++k) cost[k] = lp.objective[k];
  std::vector<bool> allowed(cols, true);
  for (std::size_t k = first_artificial; k < cols; ++k) allowed[k] = false;
  if (!tab.Optimize(cost, allowed)) return {LpStatus::kUnbounded, 0, {}};

  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.x.assign(n, 0);
  for (std::size_t r = 0; r < tab.num_rows(); ++r) {
    if (tab.basis()[r] < n) sol.x[tab.basis()[r]] = tab.rhs(r);
  }
  sol.value = 0;
  for (std::size_t k = 0; k < n; ++k) sol.value += lp.objective[k] * sol.x[k];
  return sol;
}

}  // namespace epigame
