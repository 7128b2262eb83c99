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

#ifndef DPREPEAT_GAME_STAGE_GAME_H_
#define DPREPEAT_GAME_STAGE_GAME_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dprepeat/game/outcome_space.h"

namespace dprepeat {

// normalized = scale * raw + offset. One map is shared by all players, so the
// normalized game is the raw game up to a positive affine transformation.
struct AffineMap {
  double scale = 1.0;
  double offset = 0.0;

  double Apply(double raw) const { return scale * raw + offset; }
  bool identity() const { return scale == 1.0 && offset == 0.0; }
};

// The one-shot game. Payoffs are stored normalized to [0,1]; inputs outside
// that range are rescaled by a single global affine map that is kept in
// normalization().
class StageGame {
 public:
  using ExplicitRule = std::function<double(int player, std::span<const int>)>;
  // Payoff of a player choosing `own` against the counts of the others'
  // actions (length num_actions, summing to num_players - 1).
  using AnonymousRule =
      std::function<double(int own, std::span<const int> others)>;

  StageGame() = default;

  // payoffs[profile_index * n + player], profiles in OutcomeSpace order.
  static StageGame Explicit(std::vector<int> action_counts,
                            std::vector<double> payoffs);
  static StageGame Explicit(std::vector<int> action_counts,
                            const ExplicitRule& rule);
  // table[own_action][rank of others' histogram over num_players - 1].
  static StageGame Anonymous(int num_players, int num_actions,
                             std::vector<std::vector<double>> table);
  static StageGame Anonymous(int num_players, int num_actions,
                             const AnonymousRule& rule);

  const OutcomeSpace& outcomes() const { return outcomes_; }
  bool anonymous() const { return outcomes_.anonymous(); }
  int num_players() const { return outcomes_.num_players(); }
  int num_actions(int player) const { return outcomes_.num_actions(player); }
  const std::vector<int>& action_counts() const {
    return outcomes_.action_counts();
  }
  const AffineMap& normalization() const { return normalization_; }

  double Payoff(int player, std::span<const int> profile) const;
  // Payoff of `player` who chose `own_action` when the realized outcome
  // (which includes that choice) is `outcome`.
  double PayoffAt(int player, int own_action, std::int64_t outcome) const;
  // Anonymous games: payoff against an explicit count vector of the others.
  double AnonymousPayoff(int own_action, std::span<const int> others) const;

  const std::vector<double>& explicit_payoffs() const { return payoffs_; }
  const std::vector<std::vector<double>>& anonymous_table() const {
    return table_;
  }

 private:
  void Normalize();

  OutcomeSpace outcomes_;
  std::vector<double> payoffs_;
  std::vector<std::vector<double>> table_;
  AffineMap normalization_;
};

// A mixed action per player. Each vector is nonnegative and sums to one
// within 1e-12.
class MixedProfile {
 public:
  MixedProfile() = default;
  explicit MixedProfile(std::vector<std::vector<double>> strategies);

  static MixedProfile Pure(std::span<const int> action_counts,
                           std::span<const int> profile);
  static MixedProfile Uniform(std::span<const int> action_counts);

  int num_players() const { return static_cast<int>(strategies_.size()); }
  std::span<const double> strategy(int player) const {
    return strategies_[player];
  }
  double prob(int player, int action) const {
    return strategies_[player][action];
  }
  const std::vector<std::vector<double>>& strategies() const {
    return strategies_;
  }

  MixedProfile WithStrategy(int player, std::vector<double> strategy) const;
  MixedProfile WithPure(int player, int action) const;
  // Index of the action carrying all mass, or -1.
  int PureAction(int player) const;

 private:
  std::vector<std::vector<double>> strategies_;
};

inline constexpr double kNormalizationTolerance = 1e-12;

// Throws kInvalidArgument unless `dist` is a probability vector.
void CheckDistribution(std::span<const double> dist, const char* what);
// Throws kInvalidArgument unless the profile's shape matches the game.
void CheckProfileShape(const OutcomeSpace& outcomes,
                       const MixedProfile& profile);

}  // namespace dprepeat

#endif  // DPREPEAT_GAME_STAGE_GAME_H_
