// Copyright 2026 The dprepeat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dprepeat/game/stage_game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dprepeat/errors.h"

namespace dprepeat {

StageGame StageGame::Explicit(std::vector<int> action_counts,
                              std::vector<double> payoffs) {
  StageGame game;
  game.outcomes_ = OutcomeSpace::Profiles(std::move(action_counts));
  const std::int64_t expected =
      game.outcomes_.size() * game.outcomes_.num_players();
  Require(static_cast<std::int64_t>(payoffs.size()) == expected,
          "payoff tensor has " + std::to_string(payoffs.size()) +
              " entries, expected " + std::to_string(expected));
  game.payoffs_ = std::move(payoffs);
  game.Normalize();
  return game;
}

StageGame StageGame::Explicit(std::vector<int> action_counts,
                              const ExplicitRule& rule) {
  const OutcomeSpace space = OutcomeSpace::Profiles(action_counts);
  const int n = space.num_players();
  std::vector<double> payoffs(space.size() * n);
  for (std::int64_t o = 0; o < space.size(); ++o) {
    const std::vector<int> profile = space.Coordinates(o);
    for (int i = 0; i < n; ++i) payoffs[o * n + i] = rule(i, profile);
  }
  return Explicit(std::move(action_counts), std::move(payoffs));
}

StageGame StageGame::Anonymous(int num_players, int num_actions,
                               std::vector<std::vector<double>> table) {
  StageGame game;
  game.outcomes_ = OutcomeSpace::Histograms(num_players, num_actions);
  const std::int64_t others = CountCompositions(num_players - 1, num_actions);
  Require(static_cast<int>(table.size()) == num_actions,
          "anonymous table needs one row per action");
  for (const auto& row : table) {
    Require(static_cast<std::int64_t>(row.size()) == others,
            "anonymous table row must cover every histogram of the others");
  }
  game.table_ = std::move(table);
  game.Normalize();
  return game;
}

StageGame StageGame::Anonymous(int num_players, int num_actions,
                               const AnonymousRule& rule) {
  Require(num_players >= 1 && num_actions >= 1, "empty anonymous game");
  const std::int64_t others = CountCompositions(num_players - 1, num_actions);
  if (others > kMaxOutcomes) {
    Fail(ErrorKind::kGuard, "anonymous payoff table too large");
  }
  std::vector<std::vector<double>> table(num_actions,
                                         std::vector<double>(others));
  for (std::int64_t r = 0; r < others; ++r) {
    const std::vector<int> counts =
        UnrankComposition(r, num_players - 1, num_actions);
    for (int a = 0; a < num_actions; ++a) table[a][r] = rule(a, counts);
  }
  return Anonymous(num_players, num_actions, std::move(table));
}

void StageGame::Normalize() {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto scan = [&](double v) {
    Require(std::isfinite(v), "payoffs must be finite");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  for (double v : payoffs_) scan(v);
  for (const auto& row : table_) {
    for (double v : row) scan(v);
  }
  if (lo >= 0.0 && hi <= 1.0) return;
  if (hi > lo) {
    normalization_.scale = 1.0 / (hi - lo);
    normalization_.offset = -lo / (hi - lo);
  } else {
    normalization_.offset = 0.5 - lo;
  }
  auto apply = [&](double& v) {
    v = std::clamp(normalization_.Apply(v), 0.0, 1.0);
  };
  std::for_each(payoffs_.begin(), payoffs_.end(), apply);
  for (auto& row : table_) std::for_each(row.begin(), row.end(), apply);
}

double StageGame::Payoff(int player, std::span<const int> profile) const {
  const std::int64_t outcome = outcomes_.Encode(profile);
  return PayoffAt(player, profile[player], outcome);
}

double StageGame::PayoffAt(int player, int own_action,
                           std::int64_t outcome) const {
  if (!anonymous()) {
    return payoffs_[outcome * outcomes_.num_players() + player];
  }
  std::vector<int> counts = outcomes_.Coordinates(outcome);
  Require(counts[own_action] > 0, "outcome does not contain own action");
  --counts[own_action];
  return table_[own_action][RankComposition(counts)];
}

double StageGame::AnonymousPayoff(int own_action,
                                  std::span<const int> others) const {
  Require(anonymous(), "not an anonymous game");
  return table_[own_action][RankComposition(others)];
}

void CheckDistribution(std::span<const double> dist, const char* what) {
  double total = 0.0;
  for (double p : dist) {
    Require(std::isfinite(p) && p >= 0.0,
            std::string(what) + " has a negative or non-finite entry");
    total += p;
  }
  Require(std::abs(total - 1.0) <= kNormalizationTolerance,
          std::string(what) + " does not sum to 1");
}

MixedProfile::MixedProfile(std::vector<std::vector<double>> strategies)
    : strategies_(std::move(strategies)) {
  for (const auto& s : strategies_) CheckDistribution(s, "mixed strategy");
}

MixedProfile MixedProfile::Pure(std::span<const int> action_counts,
                                std::span<const int> profile) {
  Require(action_counts.size() == profile.size(), "profile length mismatch");
  std::vector<std::vector<double>> strategies;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    Require(profile[i] >= 0 && profile[i] < action_counts[i],
            "action index out of range");
    std::vector<double> s(action_counts[i], 0.0);
    s[profile[i]] = 1.0;
    strategies.push_back(std::move(s));
  }
  return MixedProfile(std::move(strategies));
}

MixedProfile MixedProfile::Uniform(std::span<const int> action_counts) {
  std::vector<std::vector<double>> strategies;
  for (int k : action_counts) {
    strategies.emplace_back(k, 1.0 / k);
  }
  return MixedProfile(std::move(strategies));
}

MixedProfile MixedProfile::WithStrategy(int player,
                                        std::vector<double> strategy) const {
  MixedProfile copy = *this;
  CheckDistribution(strategy, "mixed strategy");
  Require(strategy.size() == copy.strategies_[player].size(),
          "strategy length mismatch");
  copy.strategies_[player] = std::move(strategy);
  return copy;
}

MixedProfile MixedProfile::WithPure(int player, int action) const {
  MixedProfile copy = *this;
  auto& s = copy.strategies_[player];
  std::fill(s.begin(), s.end(), 0.0);
  s[action] = 1.0;
  return copy;
}

int MixedProfile::PureAction(int player) const {
  const auto& s = strategies_[player];
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] == 1.0) return static_cast<int>(a);
  }
  return -1;
}

void CheckProfileShape(const OutcomeSpace& outcomes,
                       const MixedProfile& profile) {
  Require(profile.num_players() == outcomes.num_players(),
          "profile has " + std::to_string(profile.num_players()) +
              " players, game has " + std::to_string(outcomes.num_players()));
  for (int i = 0; i < profile.num_players(); ++i) {
    Require(static_cast<int>(profile.strategy(i).size()) ==
                outcomes.num_actions(i),
            "strategy of player " + std::to_string(i) +
                " does not match the action count");
  }
}

}  // namespace dprepeat
