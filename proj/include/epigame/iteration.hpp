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

#ifndef EPIGAME_ITERATION_HPP_
#define EPIGAME_ITERATION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "epigame/game.hpp"
#include "epigame/ordinal.hpp"
#include "epigame/report.hpp"
#include "epigame/restriction.hpp"

namespace epigame {

// An operator on the lattice of restrictions of one game.
struct Operator {
  std::string name;
  std::function<Restriction(const Restriction&)> apply;

  Restriction operator()(const Restriction& g) const { return apply(g); }
};

Operator IdentityOperator();
Operator ConstantOperator(Restriction value, std::string name);

struct IterationStep {
  Ordinal ordinal;
  Restriction restriction;

  friend bool operator==(const IterationStep&, const IterationStep&) = default;
};

// T^0 = top, T^{a+1} = T(T^a), up to the closure ordinal. For finite games no
// limit stage is ever reached, so every label has a zero omega part.
struct IterationTrace {
  std::vector<IterationStep> steps;
  Ordinal closure_ordinal;
  Restriction outcome;

  friend bool operator==(const IterationTrace&, const IterationTrace&) = default;
};

// Iterates from the top until T^{a+1} = T^a. Throws BudgetError after
// `budget` applications (0 selects 10 * sum_i |T_i|).
IterationTrace IterateOperator(const Operator& op, const Game& game,
                               std::size_t budget = 0);

bool IsFixpoint(const Operator& op, const Restriction& g);
bool IsPostFixpoint(const Operator& op, const Restriction& g);

// Images of an operator over the whole lattice, computed once. Images are
// stored by lattice key.
class OperatorTable {
 public:
  OperatorTable(const Operator& op, const Game& game, std::size_t max_bits);

  const RestrictionLattice& lattice() const { return lattice_; }
  std::uint64_t size() const { return images_.size(); }
  std::uint64_t image(std::uint64_t key) const { return images_[key]; }
  std::uint64_t top() const { return images_.size() - 1; }

  // First covering pair G < G' (G' adds one strategy) with T(G) not <= T(G').
  std::optional<std::pair<std::uint64_t, std::uint64_t>> FindMonotonicityViolation()
      const;
  // First G with T(G) not <= G, if any.
  std::optional<std::uint64_t> FindContractionViolation() const;

 private:
  RestrictionLattice lattice_;
  std::vector<std::uint64_t> images_;
};

// Operator that answers from a precomputed table.
Operator TabulatedOperator(const OperatorTable& table, std::string name);

// Checks T^infinity = largest fixpoint = join of all post-fixpoints over the
// fully enumerated lattice. A non-monotonic operator yields a
// precondition-violation report.
CheckReport VerifyTarski(const Operator& op, const Game& game,
                         const Budget& budget = {});

// Confirms iteration ends in a fixpoint, the operator contracts every visited
// restriction, the trace strictly decreases and the closure ordinal is at most
// sum_i |T_i|. Lattice-wide contraction is reported as a detail.
CheckReport VerifyContractingOutcome(const Operator& op, const Game& game,
                                     const Budget& budget = {});

// Lemma hypotheses (pointwise op1 <= op2, op1 monotonic, op2 contracting) and
// conclusion op1^infinity <= op2^infinity, plus the stagewise inclusion.
CheckReport VerifyInclusionLemma(const Operator& op1, const Operator& op2,
                                 const Game& game, const Budget& budget = {});
CheckReport VerifyInclusionLemma(const OperatorTable& t1, const std::string& name1,
                                 const OperatorTable& t2, const std::string& name2,
                                 const Game& game, const Budget& budget = {});

Json RestrictionToJson(const Game& game, const Restriction& r);
Restriction RestrictionFromJson(const Game& game, const Json& j);
Json TraceToJson(const Game& game, const IterationTrace& trace);
IterationTrace TraceFromJson(const Game& game, const Json& j);

}  // namespace epigame

#endif  // EPIGAME_ITERATION_HPP_
