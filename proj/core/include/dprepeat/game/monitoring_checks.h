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

#ifndef DPREPEAT_GAME_MONITORING_CHECKS_H_
#define DPREPEAT_GAME_MONITORING_CHECKS_H_

#include <cstdint>
#include <string>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"

namespace dprepeat {

inline constexpr double kPayoffConsistencyTolerance = 1e-9;

struct PayoffConsistency {
  double max_discrepancy = 0.0;
  int player = 0;
  std::int64_t outcome = 0;
  bool consistent() const {
    return max_discrepancy <= kPayoffConsistencyTolerance;
  }
};

// max over players and outcomes of |u_i(a) - sum_s U_i(a_i, s) P_a(s)|, the
// signal being a sufficient statistic for the realized payoff. Ex-post
// payoffs are compared on the game's normalized scale. Private structures
// use the player's own signal marginal.
PayoffConsistency CheckPayoffConsistency(const StageGame& game,
                                         const SignalStructure& signals);

struct FullSupport {
  bool holds = true;
  // Witness when !holds: the outcome, the player (-1 for public), and the
  // signal that receives zero probability.
  std::int64_t outcome = -1;
  int player = -1;
  int signal = -1;
};

// No observable deviations: every public signal, or every player's private
// signal marginal, has positive probability under every outcome.
FullSupport CheckFullSupport(const SignalStructure& signals);

}  // namespace dprepeat

#endif  // DPREPEAT_GAME_MONITORING_CHECKS_H_
