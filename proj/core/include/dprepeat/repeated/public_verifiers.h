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

#ifndef DPREPEAT_REPEATED_PUBLIC_VERIFIERS_H_
#define DPREPEAT_REPEATED_PUBLIC_VERIFIERS_H_

#include <span>
#include <string>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/privacy/privacy_curve.h"
#include "dprepeat/repeated/automaton.h"
#include "dprepeat/repeated/deviation.h"
#include "dprepeat/repeated/report.h"

namespace dprepeat {

struct VerifyOptions {
  std::string instance;
  SlackMode slack = SlackMode::kMeasured;
};

// Fills delta, eta and the curve minimizer on a fresh report.
RegretReport StartReport(int theorem, double delta, const PrivacyCurve& curve,
                         const StageGame& game, const VerifyOptions& options);

// Every public history: stage regret at each transition-reachable state.
RegretReport VerifyTheorem1(const StageGame& game,
                            const SignalStructure& signals,
                            const PublicStrategyAutomaton& automaton,
                            double delta, const PrivacyCurve& curve,
                            const VerifyOptions& options = {});

// Positive-probability histories only. States breaking the bound receive an
// explicit single-history deviation in report.deviations.
RegretReport VerifyTheorem3(const StageGame& game,
                            const SignalStructure& signals,
                            const PublicStrategyAutomaton& automaton,
                            double delta, const PrivacyCurve& curve,
                            const VerifyOptions& options = {});

// Gain to `player` from playing `action` once after the public `history`
// and then following the automaton again, from solving the chain of
// (state, progress along history) pairs.
double SingleHistoryDeviationGain(const StageGame& game,
                                  const SignalStructure& signals,
                                  const PublicStrategyAutomaton& automaton,
                                  double delta, std::span<const int> history,
                                  int player, int action);

// Builds the deviation at an on-path `state` using its shortest history and
// the best response of the player with the largest stage regret.
HistoryDeviation ConstructSingleHistoryDeviation(
    const StageGame& game, const SignalStructure& signals,
    const PublicStrategyAutomaton& automaton, const ValueTable& values,
    const Reachability& reach, int state, double eta);

}  // namespace dprepeat

#endif  // DPREPEAT_REPEATED_PUBLIC_VERIFIERS_H_
