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

#ifndef DPREPEAT_REPEATED_VALUES_H_
#define DPREPEAT_REPEATED_VALUES_H_

#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/repeated/automaton.h"

namespace dprepeat {

inline constexpr double kSolverResidual = 1e-10;
// Dense joint-state solves are limited to this many joint states.
inline constexpr std::int64_t kMaxJointStates = 4096;

// Normalized continuation values, values[player][state]. For per-player
// automata the state index is the JointStateSpace index.
struct ValueTable {
  double delta = 0.0;
  std::vector<std::vector<double>> values;
  double residual = 0.0;

  double at(int player, std::int64_t state) const {
    return values[player][state];
  }
};

void CheckDiscount(double delta);

// Stage quantities of a public automaton at one state.
struct PublicStateStage {
  std::vector<double> payoffs;  // u_i(d(w)) per player
  std::vector<double> signals;  // P_{d(w)}(s)
};
std::vector<PublicStateStage> PublicStages(const StageGame& game,
                                           const SignalStructure& signals,
                                           const PublicStrategyAutomaton& automaton);

ValueTable SolveValuesPublic(const StageGame& game,
                             const SignalStructure& signals,
                             const PublicStrategyAutomaton& automaton,
                             double delta);

// Values over joint automaton states for per-player strategies, under public
// or private monitoring.
ValueTable SolveJointValues(const StageGame& game,
                            const SignalStructure& signals,
                            const StrategyProfile& strategies, double delta);

}  // namespace dprepeat

#endif  // DPREPEAT_REPEATED_VALUES_H_
