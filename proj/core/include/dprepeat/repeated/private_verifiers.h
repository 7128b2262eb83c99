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

#ifndef DPREPEAT_REPEATED_PRIVATE_VERIFIERS_H_
#define DPREPEAT_REPEATED_PRIVATE_VERIFIERS_H_

#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/privacy/privacy_curve.h"
#include "dprepeat/repeated/automaton.h"
#include "dprepeat/repeated/history.h"
#include "dprepeat/repeated/public_verifiers.h"
#include "dprepeat/repeated/values.h"

namespace dprepeat {

// Stage deviation value of `action` against the posterior at a private
// history, relative to the prescribed mixture: the incentive constraint of a
// correlated equilibrium whose signals are private histories.
double HistoryDeviationValue(const StageGame& game,
                             const StrategyProfile& strategies,
                             const BeliefState<double>& belief, int action);

struct HistoryRegret {
  double regret = 0.0;  // max over actions, >= 0
  int best_action = 0;
};
HistoryRegret HistoryCorrelatedRegret(const StageGame& game,
                                      const StrategyProfile& strategies,
                                      const BeliefState<double>& belief);

// Largest gain over actions from deviating once at the history and then
// continuing as if the prescribed mixture had been played.
double HistoryOneShotGain(const StageGame& game,
                          const SignalStructure& signals,
                          const StrategyProfile& strategies,
                          const ValueTable& joint_values,
                          const BeliefState<double>& belief);

// Play distribution given each positive-probability public history, checked
// as a stage Nash profile. Needs a full-support public structure.
RegretReport VerifyTheorem2(const StageGame& game,
                            const SignalStructure& signals,
                            const StrategyProfile& strategies, double delta,
                            const PrivacyCurve& curve, int horizon,
                            const VerifyOptions& options = {});

// Correlated regret at every positive-probability private history.
RegretReport VerifyTheorem4(const StageGame& game,
                            const SignalStructure& signals,
                            const StrategyProfile& strategies, double delta,
                            const PrivacyCurve& curve, int horizon,
                            const VerifyOptions& options = {});

}  // namespace dprepeat

#endif  // DPREPEAT_REPEATED_PRIVATE_VERIFIERS_H_
