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

#include "epigame/symbolic_set.hpp"

#include <algorithm>
#include <set>

#include "epigame/errors.hpp"

namespace epigame {
namespace {

// Orders lower endpoints by where the piece starts.
int CompareLower(const Endpoint& a, const Endpoint& b) {
  if (a.infinity != b.infinity) return a.infinity < b.infinity ? -1 : 1;
  if (a.infinity != 0) return 0;
  if (a.value != b.value) return a.value < b.value ? -1 : 1;
  if (a.closed == b.closed) return 0;
  return a.closed ? -1 : 1;
}

// Orders upper endpoints by where the piece ends.
int CompareUpper(const Endpoint& a, const Endpoint& b) {
  if (a.infinity != b.infinity) return a.infinity < b.infinity ? -1 : 1;
  if (a.infinity != 0) return 0;
  if (a.value != b.value) return a.value < b.value ? -1 : 1;
  if (a.closed == b.closed) return 0;
  return a.closed ? 1 : -1;
}

// A piece ending at `hi` and the next starting at `lo` leave no gap.
bool Touches(const Endpoint& hi, const Endpoint& lo) {
  if (hi.infinity == +1 || lo.infinity == -1) return true;
  if (hi.infinity == -1 || lo.infinity == +1) return false;
  if (lo.value < hi.value) return true;
  return lo.value == hi.value && (hi.closed || lo.closed);
}

Endpoint Flip(const Endpoint& e) {
  Endpoint out = e;
  out.closed = e.infinity == 0 && !e.closed;
  return out;
}

std::string EndpointString(const Endpoint& e) {
  if (e.infinity < 0) return "-inf";
  if (e.infinity > 0) return "+inf";
  return epigame::ToString(e.value);
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

Rational ParseNumber(const std::string& text) {
  auto r = ParseRational(text);
  if (!r) throw ArgumentError("malformed rational '" + text + "' in set");
  return *r;
}

Endpoint ParseEndpoint(const std::string& text, bool closed) {
  if (text == "-inf") return Endpoint::NegInf();
  if (text == "inf" || text == "+inf") return Endpoint::PosInf();
  return Endpoint::Finite(ParseNumber(text), closed);
}

}  // namespace

bool Interval::IsEmpty() const {
  if (lo.infinity == +1 || hi.infinity == -1) return true;
  if (lo.infinity == -1 || hi.infinity == +1) return false;
  if (lo.value != hi.value) return lo.value > hi.value;
  return !(lo.closed && hi.closed);
}

bool Interval::IsPoint() const {
  return lo.infinity == 0 && hi.infinity == 0 && lo.value == hi.value &&
         lo.closed && hi.closed;
}

bool Interval::Contains(const Rational& x) const {
  const bool above = lo.infinity == -1 ||
                     (lo.infinity == 0 && (lo.value < x || (lo.closed && lo.value == x)));
  const bool below = hi.infinity == +1 ||
                     (hi.infinity == 0 && (x < hi.value || (hi.closed && hi.value == x)));
  return above && below;
}

SymbolicSet::SymbolicSet(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& p) { return p.IsEmpty(); });
  for (auto& p : pieces) {
    if (p.lo.infinity != 0) p.lo.closed = false;
    if (p.hi.infinity != 0) p.hi.closed = false;
  }
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    return CompareLower(a.lo, b.lo) < 0;
  });
  for (auto& p : pieces) {
    if (!pieces_.empty() && Touches(pieces_.back().hi, p.lo)) {
      if (CompareUpper(p.hi, pieces_.back().hi) > 0) pieces_.back().hi = p.hi;
    } else {
      pieces_.push_back(p);
    }
  }
}

SymbolicSet SymbolicSet::Everything() {
  return Make(Endpoint::NegInf(), Endpoint::PosInf());
}

SymbolicSet SymbolicSet::Point(const Rational& x) { return Closed(x, x); }

SymbolicSet SymbolicSet::Points(const std::vector<Rational>& xs) {
  std::vector<Interval> pieces;
  for (const auto& x : xs) {
    pieces.push_back({Endpoint::Finite(x, true), Endpoint::Finite(x, true)});
  }
  return SymbolicSet(std::move(pieces));
}

SymbolicSet SymbolicSet::Closed(const Rational& a, const Rational& b) {
  return Make(Endpoint::Finite(a, true), Endpoint::Finite(b, true));
}

SymbolicSet SymbolicSet::Open(const Rational& a, const Rational& b) {
  return Make(Endpoint::Finite(a, false), Endpoint::Finite(b, false));
}

SymbolicSet SymbolicSet::Make(const Endpoint& lo, const Endpoint& hi) {
  return SymbolicSet(std::vector<Interval>{{lo, hi}});
}

SymbolicSet SymbolicSet::AtMost(const Rational& b, bool closed) {
  return Make(Endpoint::NegInf(), Endpoint::Finite(b, closed));
}

SymbolicSet SymbolicSet::AtLeast(const Rational& a, bool closed) {
  return Make(Endpoint::Finite(a, closed), Endpoint::PosInf());
}

bool SymbolicSet::IsFinitePointSet() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Interval& p) { return p.IsPoint(); });
}

bool SymbolicSet::Contains(const Rational& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [&](const Interval& p) { return p.Contains(x); });
}

bool SymbolicSet::IsSubsetOf(const SymbolicSet& other) const {
  return Difference(other).empty();
}

SymbolicSet SymbolicSet::Union(const SymbolicSet& other) const {
  std::vector<Interval> pieces = pieces_;
  pieces.insert(pieces.end(), other.pieces_.begin(), other.pieces_.end());
  return SymbolicSet(std::move(pieces));
}

SymbolicSet SymbolicSet::Intersect(const SymbolicSet& other) const {
  std::vector<Interval> pieces;
  for (const auto& a : pieces_) {
    for (const auto& b : other.pieces_) {
      Interval p{CompareLower(a.lo, b.lo) >= 0 ? a.lo : b.lo,
                 CompareUpper(a.hi, b.hi) <= 0 ? a.hi : b.hi};
      if (!p.IsEmpty()) pieces.push_back(p);
    }
  }
  return SymbolicSet(std::move(pieces));
}

SymbolicSet SymbolicSet::Complement() const {
  std::vector<Interval> gaps;
  Endpoint start = Endpoint::NegInf();
  for (const auto& p : pieces_) {
    if (p.lo.infinity != -1) gaps.push_back({start, Flip(p.lo)});
    start = Flip(p.hi);
  }
  if (pieces_.empty() || pieces_.back().hi.infinity != +1) {
    gaps.push_back({start, Endpoint::PosInf()});
  }
  return SymbolicSet(std::move(gaps));
}

SymbolicSet SymbolicSet::Difference(const SymbolicSet& other) const {
  return Intersect(other.Complement());
}

SymbolicSet SymbolicSet::Scale(const Rational& k) const {
  if (empty()) return {};
  if (k == 0) return Point(Rational(0));
  std::vector<Interval> pieces;
  for (const auto& p : pieces_) {
    auto scale = [&](Endpoint e) {
      if (e.infinity != 0) {
        e.infinity = k > 0 ? e.infinity : -e.infinity;
      } else {
        e.value = e.value * k;
        e.value.canonicalize();
      }
      return e;
    };
    if (k > 0) {
      pieces.push_back({scale(p.lo), scale(p.hi)});
    } else {
      pieces.push_back({scale(p.hi), scale(p.lo)});
    }
  }
  return SymbolicSet(std::move(pieces));
}

Endpoint SymbolicSet::Supremum() const { return pieces_.back().hi; }

Endpoint SymbolicSet::Infimum() const { return pieces_.front().lo; }

bool SymbolicSet::AccumulatesFromRightAt(const Rational& x) const {
  for (const auto& p : pieces_) {
    const bool starts = p.lo.infinity == -1 || (p.lo.infinity == 0 && p.lo.value <= x);
    const bool ends_after = p.hi.infinity == +1 || (p.hi.infinity == 0 && p.hi.value > x);
    if (starts && ends_after) return true;
  }
  return false;
}

std::optional<Rational> SymbolicSet::AnyPoint() const {
  if (empty()) return std::nullopt;
  const auto& p = pieces_.front();
  if (p.lo.infinity == 0 && p.lo.closed) return p.lo.value;
  if (p.hi.infinity == 0 && p.hi.closed) return p.hi.value;
  if (p.lo.infinity == 0 && p.hi.infinity == 0) {
    Rational mid = (p.lo.value + p.hi.value) / 2;
    mid.canonicalize();
    return mid;
  }
  if (p.lo.infinity == 0) return Rational(p.lo.value + 1);
  if (p.hi.infinity == 0) return Rational(p.hi.value - 1);
  return Rational(0);
}

std::vector<Rational> SymbolicSet::ProbePoints(std::size_t samples) const {
  std::vector<Rational> out;
  const std::size_t dyadic = std::min<std::size_t>(samples, 16);
  for (const auto& p : pieces_) {
    if (p.IsPoint()) {
      out.push_back(p.lo.value);
      continue;
    }
    if (p.lo.infinity == 0 && p.lo.closed) out.push_back(p.lo.value);
    if (p.hi.infinity == 0 && p.hi.closed) out.push_back(p.hi.value);
    if (p.lo.infinity == 0 && p.hi.infinity == 0) {
      const Rational a = p.lo.value;
      const Rational width = p.hi.value - a;
      for (std::size_t k = 1; k <= samples; ++k) {
        out.emplace_back(a + width * Rational(static_cast<long>(k),
                                              static_cast<unsigned long>(samples + 1)));
      }
      Rational step = width;
      for (std::size_t j = 0; j < dyadic; ++j) {
        step /= 2;
        out.emplace_back(a + step);
        out.emplace_back(p.hi.value - step);
      }
      continue;
    }
    // Unbounded piece: walk away from the finite end, or around 0.
    const Rational anchor = p.lo.infinity == 0   ? Rational(p.lo.value)
                            : p.hi.infinity == 0 ? Rational(p.hi.value)
                                                 : Rational(0);
    const int dir = p.lo.infinity == 0 ? 1 : -1;
    if (p.lo.infinity != 0 && p.hi.infinity != 0) out.push_back(anchor);
    Rational step(1);
    for (std::size_t j = 0; j < dyadic; ++j) {
      step /= 2;
      out.emplace_back(anchor + dir * step);
    }
    for (std::size_t k = 1; k <= samples; ++k) {
      out.emplace_back(anchor + dir * static_cast<long>(k));
    }
  }
  for (auto& x : out) x.canonicalize();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](const Rational& x) { return !Contains(x); });
  return out;
}

std::string SymbolicSet::ToString() const {
  if (empty()) return "{}";
  std::string out;
  bool in_points = false;
  for (const auto& p : pieces_) {
    if (p.IsPoint()) {
      out += in_points ? "," : (out.empty() ? "{" : " U {");
      out += epigame::ToString(p.lo.value);
      in_points = true;
      continue;
    }
    if (in_points) out += "}";
    in_points = false;
    if (!out.empty()) out += " U ";
    out += p.lo.closed ? '[' : '(';
    out += EndpointString(p.lo) + "," + EndpointString(p.hi);
    out += p.hi.closed ? ']' : ')';
  }
  if (in_points) out += "}";
  return out;
}

SymbolicSet ParseSymbolicSet(std::string_view text) {
  std::vector<Interval> pieces;
  const std::string all = Trim(text);
  if (all.empty()) throw ArgumentError("empty set description");
  std::size_t start = 0;
  while (start <= all.size()) {
    auto pos = all.find('U', start);
    if (pos == std::string::npos) pos = all.size();
    const std::string piece = Trim(std::string_view(all).substr(start, pos - start));
    start = pos + 1;
    if (piece.size() < 2) throw ArgumentError("malformed set piece '" + piece + "'");
    const char open = piece.front();
    const char close = piece.back();
    const std::string body = piece.substr(1, piece.size() - 2);
    if (open == '{' && close == '}') {
      std::size_t b = 0;
      while (!Trim(body).empty() && b <= body.size()) {
        auto comma = body.find(',', b);
        if (comma == std::string::npos) comma = body.size();
        const Rational x = ParseNumber(Trim(std::string_view(body).substr(b, comma - b)));
        pieces.push_back({Endpoint::Finite(x, true), Endpoint::Finite(x, true)});
        b = comma + 1;
      }
    } else if ((open == '[' || open == '(') && (close == ']' || close == ')')) {
      const auto comma = body.find(',');
      if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos) {
        throw ArgumentError("malformed interval '" + piece + "'");
      }
      const Endpoint lo = ParseEndpoint(Trim(body.substr(0, comma)), open == '[');
      const Endpoint hi = ParseEndpoint(Trim(body.substr(comma + 1)), close == ']');
      if (lo.infinity == +1 || hi.infinity == -1 ||
          (lo.infinity != 0 && open == '[') || (hi.infinity != 0 && close == ']')) {
        throw ArgumentError("malformed interval '" + piece + "'");
      }
      pieces.push_back({lo, hi});
    } else {
      throw ArgumentError("malformed set piece '" + piece + "'");
    }
    if (pos == all.size()) break;
  }
  return SymbolicSet(std::move(pieces));
}

bool SymbolicLeq(const SymbolicRestriction& a, const SymbolicRestriction& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].IsSubsetOf(b[i])) return false;
  }
  return true;
}

std::string ToString(const SymbolicRestriction& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += "; ";
    out += r[i].ToString();
  }
  return out + ")";
}

}  // namespace epigame
