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

#include "epigame/property.hpp"

#include "epigame/errors.hpp"

namespace epigame {
namespace {

constexpr std::size_t kMaxFindings = 100;

int SpecCode(const PropertySpec& spec) {
  return static_cast<int>(spec.kind) * 100 + static_cast<int>(spec.scope) * 10 +
         (spec.belief ? static_cast<int>(*spec.belief) + 1 : 0);
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

Json JointNames(const Game& game, const JointStrategy& joint) {
  Json out = Json::array();
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    out.push_back(game.strategy_name(i, joint[i]));
  }
  return out;
}

}  // namespace

PropertySpec PropertySpec::Parse(std::string_view text) {
  const auto parts = Split(text, ':');
  PropertySpec spec;
  auto fail = [&]() -> PropertySpec {
    throw ArgumentError("unknown property spec '" + std::string(text) +
                        "' (expected sd:l, sd:g, msd:l, msd:g or "
                        "br:<l|g>:<pure|corr|ind>)");
  };
  if (parts.size() < 2) return fail();
  if (parts[0] == "sd") {
    spec.kind = PropertyKind::kSd;
  } else if (parts[0] == "msd") {
    spec.kind = PropertyKind::kMsd;
  } else if (parts[0] == "br") {
    spec.kind = PropertyKind::kBr;
  } else {
    return fail();
  }
  if (parts[1] == "l") {
    spec.scope = Scope::kLocal;
  } else if (parts[1] == "g") {
    spec.scope = Scope::kGlobal;
  } else {
    return fail();
  }
  if (spec.kind == PropertyKind::kBr) {
    if (parts.size() != 3) return fail();
    if (parts[2] == "pure") {
      spec.belief = BeliefKind::kPurePoint;
    } else if (parts[2] == "corr") {
      spec.belief = BeliefKind::kCorrelated;
    } else if (parts[2] == "ind") {
      spec.belief = BeliefKind::kIndependentMixed;
    } else {
      return fail();
    }
  } else if (parts.size() != 2) {
    return fail();
  }
  return spec;
}

std::string PropertySpec::ToString() const {
  std::string out = kind == PropertyKind::kSd    ? "sd"
                    : kind == PropertyKind::kMsd ? "msd"
                                                 : "br";
  out += scope == Scope::kGlobal ? ":g" : ":l";
  if (belief) {
    switch (*belief) {
      case BeliefKind::kPurePoint:
        out += ":pure";
        break;
      case BeliefKind::kCorrelated:
        out += ":corr";
        break;
      case BeliefKind::kIndependentMixed:
        out += ":ind";
        break;
    }
  }
  return out;
}

PropertyProfile PropertyProfile::Uniform(const PropertySpec& spec,
                                         std::size_t players) {
  return PropertyProfile(std::vector<PropertySpec>(players, spec));
}

PropertyProfile PropertyProfile::Parse(std::string_view text, std::size_t players) {
  if (text.find('=') == std::string_view::npos) {
    return Uniform(PropertySpec::Parse(text), players);
  }
  std::vector<std::optional<PropertySpec>> specs(players);
  for (const auto& item : Split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError("profile entry '" + item + "' is not of the form i=spec");
    }
    std::size_t player = 0;
    const std::string index = item.substr(0, eq);
    if (index.empty() || index.find_first_not_of("0123456789") != std::string::npos ||
        index.size() > 3 || (player = std::stoul(index)) < 1 || player > players) {
      throw ArgumentError("profile entry '" + item + "' names no player of a " +
                          std::to_string(players) + "-player game");
    }
    if (specs[player - 1]) {
      throw ArgumentError("player " + index + " appears twice in the profile");
    }
    specs[player - 1] = PropertySpec::Parse(item.substr(eq + 1));
  }
  std::vector<PropertySpec> out;
  for (std::size_t i = 0; i < players; ++i) {
    if (!specs[i]) {
      throw ArgumentError("profile gives no property for player " + std::to_string(i + 1));
    }
    out.push_back(*specs[i]);
  }
  return PropertyProfile(std::move(out));
}

bool PropertyProfile::IsUniform() const {
  for (const auto& s : specs_) {
    if (!(s == specs_.front())) return false;
  }
  return true;
}

std::string PropertyProfile::ToString() const {
  if (specs_.empty()) return "";
  if (IsUniform()) return specs_.front().ToString();
  std::string out;
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(i + 1) + "=" + specs_[i].ToString();
  }
  return out;
}

void ValidateProfile(const PropertyProfile& profile, const Game& game) {
  if (profile.size() != game.num_players()) {
    throw ArgumentError("property profile has " + std::to_string(profile.size()) +
                        " entries for a " + std::to_string(game.num_players()) +
                        "-player game");
  }
  for (const auto& spec : profile.specs()) {
    if (spec.belief == BeliefKind::kIndependentMixed && game.num_players() > 2) {
      throw UnsupportedConfiguration(
          "property " + spec.ToString() +
          ": independent-mixed beliefs are only supported for two-player games");
    }
  }
}

bool EvalPropertyWithPool(const PropertySpec& spec, const Game& game,
                          PlayerIndex i, StrategyIndex s,
                          const Restriction& context, StrategySet pool) {
  switch (spec.kind) {
    case PropertyKind::kSd:
      for (auto alt : pool.members()) {
        if (StrictlyDominatesPure(game, context, i, alt, s)) return false;
      }
      return true;
    case PropertyKind::kMsd:
      return !MixedDominanceWitness(game, context, i, pool, s).has_value();
    case PropertyKind::kBr:
      return ExistsSupportingBelief(game, context, pool, i, s,
                                    spec.belief.value_or(BeliefKind::kPurePoint))
          .has_value();
  }
  return false;
}

bool EvalProperty(const PropertySpec& spec, const Game& game, PlayerIndex i,
                  StrategyIndex s, const Restriction& g) {
  const StrategySet pool = spec.scope == Scope::kGlobal
                               ? StrategySet::Full(game.num_strategies(i))
                               : g[i];
  return EvalPropertyWithPool(spec, game, i, s, g, pool);
}

std::size_t PropertyOracle::KeyHash::operator()(const Key& k) const {
  std::size_t h = RestrictionHash{}(k.g);
  h ^= std::hash<std::size_t>{}((static_cast<std::size_t>(k.spec) << 24) ^
                                (k.player << 12) ^ k.strategy) +
       0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool PropertyOracle::operator()(const PropertySpec& spec, PlayerIndex i,
                                StrategyIndex s, const Restriction& g) {
  Key key{SpecCode(spec), i, s, g};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  ++evaluations_;
  const bool value = EvalProperty(spec, game_, i, s, g);
  cache_.emplace(std::move(key), value);
  return value;
}

Restriction ApplyOperator(const PropertyProfile& profile, const Game& game,
                          const Restriction& g) {
  ValidateProfile(profile, game);
  CheckShape(game, g);
  Restriction out = g;
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    for (auto s : g[i].members()) {
      if (!EvalProperty(profile[i], game, i, s, g)) out[i].erase(s);
    }
  }
  return out;
}

Operator MakeOperator(const PropertyProfile& profile, const Game& game) {
  ValidateProfile(profile, game);
  auto owned = std::make_shared<const Game>(game);
  auto oracle = std::make_shared<PropertyOracle>(*owned);
  return {"T[" + profile.ToString() + "]",
          [owned, oracle, profile](const Restriction& g) {
            CheckShape(*owned, g);
            Restriction out = g;
            for (PlayerIndex i = 0; i < owned->num_players(); ++i) {
              for (auto s : g[i].members()) {
                if (!(*oracle)(profile[i], i, s, g)) out[i].erase(s);
              }
            }
            return out;
          }};
}

IterationTrace Outcome(const PropertyProfile& profile, const Game& game,
                       std::size_t budget) {
  return IterateOperator(MakeOperator(profile, game), game, budget);
}

CheckReport CheckPropertyMonotone(const PropertySpec& spec, const Game& game,
                                  const Budget& budget) {
  CheckReport report;
  report.check = "property_monotone";
  report.details["property"] = spec.ToString();
  if (spec.belief == BeliefKind::kIndependentMixed && game.num_players() > 2) {
    throw UnsupportedConfiguration(
        "independent-mixed beliefs are only supported for two-player games");
  }
  const RestrictionLattice lattice(game, budget.lattice_bits);
  report.details["lattice_size"] = lattice.size();
  std::uint64_t violations = 0;
  std::vector<bool> holds(lattice.size());
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    for (StrategyIndex s = 0; s < game.num_strategies(i); ++s) {
      for (std::uint64_t key = 0; key < lattice.size(); ++key) {
        holds[key] = EvalProperty(spec, game, i, s, lattice.Decode(key));
      }
      // Upward closure of the set where phi holds; covering pairs suffice.
      for (std::uint64_t key = 0; key < lattice.size(); ++key) {
        if (!holds[key]) continue;
        for (std::size_t b = 0; b < lattice.bits(); ++b) {
          const std::uint64_t bigger = key | (std::uint64_t{1} << b);
          if (bigger == key || holds[bigger]) continue;
          ++violations;
          if (report.findings.size() < kMaxFindings) {
            report.Fail({{"player", i + 1},
                         {"strategy", game.strategy_name(i, s)},
                         {"smaller", lattice.Decode(key).Names(game)},
                         {"larger", lattice.Decode(bigger).Names(game)}});
          }
        }
      }
    }
  }
  report.details["violations"] = violations;
  return report;
}

CheckReport CheckSingletonCondition(const PropertySpec& spec, const Game& game) {
  CheckReport report;
  report.check = "singleton_condition";
  report.details["property"] = spec.ToString();
  std::uint64_t failures = 0;
  for (std::size_t k = 0; k < game.num_joint(); ++k) {
    const JointStrategy joint = game.JointFromIndex(k);
    const Restriction g = Restriction::Singletons(game, joint);
    for (PlayerIndex i = 0; i < game.num_players(); ++i) {
      if (EvalProperty(spec, game, i, joint[i], g)) continue;
      ++failures;
      report.Fail({{"joint", JointNames(game, joint)}, {"player", i + 1}});
    }
  }
  report.details["joint_strategies"] = game.num_joint();
  report.details["failures"] = failures;
  return report;
}

namespace {

OperatorTable TableFor(const std::string& spec, const Game& game,
                       const Budget& budget) {
  return OperatorTable(
      MakeOperator(PropertyProfile::Uniform(PropertySpec::Parse(spec),
                                            game.num_players()),
                   game),
      game, budget.lattice_bits);
}

// Checks a <= b on every restriction; returns the number of failures.
std::uint64_t CheckPointwise(CheckReport& report, const Game& game,
                             const OperatorTable& a, const std::string& a_name,
                             const OperatorTable& b, const std::string& b_name) {
  std::uint64_t failures = 0;
  for (std::uint64_t key = 0; key < a.size(); ++key) {
    if ((a.image(key) & ~b.image(key)) == 0) continue;
    ++failures;
    if (report.findings.size() < kMaxFindings) {
      const auto& lat = a.lattice();
      report.Fail({{"kind", "pointwise_inclusion_fails"},
                   {"inclusion", a_name + " <= " + b_name},
                   {"restriction", lat.Decode(key).Names(game)},
                   {"left", lat.Decode(a.image(key)).Names(game)},
                   {"right", lat.Decode(b.image(key)).Names(game)}});
    }
  }
  return failures;
}

void MergeLemma(CheckReport& report, const CheckReport& lemma) {
  report.details["inclusion_lemma"] = lemma.ToJson();
  if (!lemma.passed()) {
    report.Fail({{"kind", "inclusion_lemma"}, {"verdict", ToString(lemma.verdict)}});
  }
}

}  // namespace

CheckReport VerifyTheoremJust(const Game& game, const Budget& budget) {
  CheckReport report;
  report.check = "theorem_just";
  const auto br_g = TableFor("br:g:pure", game, budget);
  const auto sd_g = TableFor("sd:g", game, budget);
  const auto sd_l = TableFor("sd:l", game, budget);
  report.details["restrictions_checked"] = br_g.size();
  std::uint64_t failures = 0;
  failures += CheckPointwise(report, game, br_g, "T[br:g:pure]", sd_g, "T[sd:g]");
  failures += CheckPointwise(report, game, sd_g, "T[sd:g]", sd_l, "T[sd:l]");
  report.details["pointwise_failures"] = failures;
  const auto lemma =
      VerifyInclusionLemma(br_g, "T[br:g:pure]", sd_l, "T[sd:l]", game, budget);
  report.details["outcome_br_g"] = lemma.details["outcome1"];
  report.details["outcome_sd_l"] = lemma.details["outcome2"];
  MergeLemma(report, lemma);
  return report;
}

CheckReport VerifyTheoremJust1(const Game& game, const Budget& budget) {
  CheckReport report;
  report.check = "theorem_just1";
  const auto br_g = TableFor("br:g:corr", game, budget);
  const auto br_l = TableFor("br:l:corr", game, budget);
  const auto msd_l = TableFor("msd:l", game, budget);
  const auto& lat = br_g.lattice();
  report.details["restrictions_checked"] = br_g.size();
  std::uint64_t failures = 0;
  failures += CheckPointwise(report, game, br_g, "T[br:g:corr]", br_l, "T[br:l:corr]");
  std::uint64_t pearce_failures = 0;
  for (std::uint64_t key = 0; key < lat.size(); ++key) {
    const Restriction g = lat.Decode(key);
    const auto pearce = PearceEquivalenceCheck(game, g);
    const auto brc = RestrictionFromJson(game, pearce.details["brc_image"]);
    const auto msd = RestrictionFromJson(game, pearce.details["msd_image"]);
    const auto br_l_img = lat.Decode(br_l.image(key));
    const auto msd_l_img = lat.Decode(msd_l.image(key));
    Json where = g.Names(game);
    if (!LatticeLeq(br_l_img, brc)) {
      ++failures;
      report.Fail({{"kind", "pointwise_inclusion_fails"},
                   {"inclusion", "T[br:l:corr] <= T[brc:l]"},
                   {"restriction", where}});
    }
    if (!pearce.passed()) {
      ++pearce_failures;
      report.Fail({{"kind", "pearce_mismatch"}, {"restriction", where},
                   {"report", pearce.ToJson()}});
    }
    if (msd != msd_l_img) {
      ++failures;
      report.Fail({{"kind", "msd_image_disagrees_with_operator"},
                   {"restriction", where}});
    }
  }
  report.details["pointwise_failures"] = failures;
  report.details["pearce_failures"] = pearce_failures;
  const auto lemma =
      VerifyInclusionLemma(br_g, "T[br:g:corr]", msd_l, "T[msd:l]", game, budget);
  report.details["outcome_br_g"] = lemma.details["outcome1"];
  report.details["outcome_msd_l"] = lemma.details["outcome2"];
  MergeLemma(report, lemma);
  return report;
}

}  // namespace epigame
