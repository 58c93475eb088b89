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

#ifndef EPIGAME_SYMBOLIC_SET_HPP_
#define EPIGAME_SYMBOLIC_SET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epigame/rational.hpp"

namespace epigame {

// An interval endpoint: a rational or an infinity. Infinite endpoints are
// always open.
struct Endpoint {
  int infinity = 0;  // -1, 0 (finite) or +1
  Rational value;
  bool closed = false;

  static Endpoint Finite(const Rational& v, bool closed) { return {0, v, closed}; }
  static Endpoint NegInf() { return {-1, Rational(0), false}; }
  static Endpoint PosInf() { return {+1, Rational(0), false}; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Interval {
  Endpoint lo;
  Endpoint hi;

  bool IsEmpty() const;
  bool IsPoint() const;
  bool Contains(const Rational& x) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of intervals in canonical form: pieces nonempty, sorted,
// pairwise disjoint, and no two adjacent pieces could be merged.
class SymbolicSet {
 public:
  SymbolicSet() = default;
  explicit SymbolicSet(std::vector<Interval> pieces);

  static SymbolicSet Empty() { return {}; }
  static SymbolicSet Everything();
  static SymbolicSet Point(const Rational& x);
  static SymbolicSet Points(const std::vector<Rational>& xs);
  static SymbolicSet Closed(const Rational& a, const Rational& b);
  static SymbolicSet Open(const Rational& a, const Rational& b);
  static SymbolicSet Make(const Endpoint& lo, const Endpoint& hi);
  // (-inf, b] or (-inf, b) and [a, +inf) or (a, +inf).
  static SymbolicSet AtMost(const Rational& b, bool closed = true);
  static SymbolicSet AtLeast(const Rational& a, bool closed = true);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool IsFinitePointSet() const;

  bool Contains(const Rational& x) const;
  bool IsSubsetOf(const SymbolicSet& other) const;

  SymbolicSet Union(const SymbolicSet& other) const;
  SymbolicSet Intersect(const SymbolicSet& other) const;
  SymbolicSet Difference(const SymbolicSet& other) const;
  SymbolicSet Complement() const;
  // {k x | x in set}.
  SymbolicSet Scale(const Rational& k) const;

  // Undefined on the empty set.
  Endpoint Supremum() const;
  Endpoint Infimum() const;

  // True iff every (x, x + e) with e > 0 meets the set.
  bool AccumulatesFromRightAt(const Rational& x) const;

  // Some member, preferring closed endpoints and then midpoints.
  std::optional<Rational> AnyPoint() const;

  // Members chosen for sampled checks: closed endpoints, `samples` evenly
  // spaced interior points per piece, and dyadic approaches to each endpoint.
  std::vector<Rational> ProbePoints(std::size_t samples) const;

  // "[0,1/2] U {2}", "(-inf,3)", "{}".
  std::string ToString() const;

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

// Inverse of ToString; throws ArgumentError on malformed input.
SymbolicSet ParseSymbolicSet(std::string_view text);

using SymbolicRestriction = std::vector<SymbolicSet>;

bool SymbolicLeq(const SymbolicRestriction& a, const SymbolicRestriction& b);
std::string ToString(const SymbolicRestriction& r);

}  // namespace epigame

#endif  // EPIGAME_SYMBOLIC_SET_HPP_
