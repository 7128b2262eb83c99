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

#ifndef DPREPEAT_GAME_EQUILIBRIUM_H_
#define DPREPEAT_GAME_EQUILIBRIUM_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"

namespace dprepeat {

using OutcomeMass = std::vector<std::pair<std::int64_t, double>>;

// Distribution over stage outcomes induced by independent mixing.
OutcomeMass OutcomeDistribution(const OutcomeSpace& outcomes,
                                const MixedProfile& profile);
// Same, with `player` fixed to the pure `own_action`.
OutcomeMass OutcomeDistribution(const OutcomeSpace& outcomes,
                                const MixedProfile& profile, int player,
                                int own_action);

// u_i(a_i, alpha_{-i}).
// For anonymous games, the first player holding the same mixed action as
// each player (such players earn identical payoffs); the identity otherwise.
std::vector<int> InterchangeablePlayers(const OutcomeSpace& outcomes,
                                        const MixedProfile& profile);

double DeviationPayoff(const StageGame& game, const MixedProfile& profile,
                       int player, int action);
double ExpectedPayoff(const StageGame& game, const MixedProfile& profile,
                      int player);
std::vector<double> ExpectedPayoffs(const StageGame& game,
                                    const MixedProfile& profile);

// P_alpha over signal points, and P_{(a_i, alpha_{-i})}.
std::vector<double> SignalDistribution(const SignalStructure& signals,
                                       const MixedProfile& profile);
std::vector<double> SignalDistribution(const SignalStructure& signals,
                                       const MixedProfile& profile, int player,
                                       int action);

struct NashRegretReport {
  std::vector<double> regret;       // per player, >= 0
  std::vector<int> best_response;   // lowest-index maximizer
  double max_regret = 0.0;
  int worst_player = 0;
};

// regret_i = max_{a_i} u_i(a_i, alpha_{-i}) - u_i(alpha). The profile is an
// eta-approximate Nash equilibrium iff max_regret <= eta.
NashRegretReport NashRegret(const StageGame& game, const MixedProfile& profile);

struct CorrelatedRegretReport {
  struct Cell {
    int player = 0;
    int signal = 0;
    double marginal = 0.0;
    double regret = 0.0;  // max over a_i of the conditional deviation value
    int best_action = 0;
  };
  std::vector<Cell> cells;  // only signals with positive marginal
  double max_regret = 0.0;
};

// For every player and every signal with positive marginal, the largest
// conditional gain from replacing the recommendation by a fixed action.
CorrelatedRegretReport CorrelatedRegret(const StageGame& game,
                                        const CorrelatedDevice& device);

// Conditional deviation value for one (player, signal, action). Throws
// kZeroProbability when the signal has zero marginal.
double ConditionalDeviationValue(const StageGame& game,
                                 const CorrelatedDevice& device, int player,
                                 int signal, int action);

}  // namespace dprepeat

#endif  // DPREPEAT_GAME_EQUILIBRIUM_H_
