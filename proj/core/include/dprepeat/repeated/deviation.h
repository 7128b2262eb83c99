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

#ifndef DPREPEAT_REPEATED_DEVIATION_H_
#define DPREPEAT_REPEATED_DEVIATION_H_

#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/privacy/mechanisms.h"
#include "dprepeat/repeated/automaton.h"
#include "dprepeat/repeated/values.h"

namespace dprepeat {

inline constexpr double kReachabilityThreshold = 1e-12;
inline constexpr double kEquilibriumTolerance = 1e-9;

struct Reachability {
  std::vector<bool> reachable;
  // Reachable state lying in a closed communicating class of the on-path
  // chain, i.e. visited with positive long-run frequency.
  std::vector<bool> recurrent;
  std::vector<int> depth;          // BFS distance from the initial state
  std::vector<int> parent;         // predecessor on a shortest path, or -1
  std::vector<int> parent_signal;  // signal taken from the predecessor
};

// States reachable from the initial state through signals that occur with
// probability above `threshold` under prescribed play. A negative threshold
// follows every transition regardless of probability.
Reachability ReachableStates(const StageGame& game,
                             const SignalStructure& signals,
                             const PublicStrategyAutomaton& automaton,
                             double threshold = kReachabilityThreshold);
Reachability TransitionReachableStates(
    const PublicStrategyAutomaton& automaton);

// Signals leading from the initial state to `state` along the BFS tree.
std::vector<int> ShortestSignalPath(const Reachability& reach, int state);

enum class StateScope {
  kTransitionReachable,  // every public history
  kOnPath,               // positive-probability histories only
};

struct DeviationWitness {
  int player = -1;
  int state = -1;
  int action = -1;
};

struct DeviationGain {
  double xi = 0.0;  // >= 0
  DeviationWitness witness;
  // Largest gain over players and actions at each state; 0 outside scope.
  std::vector<double> per_state;
};

// Gain of deviating to `action` for one period at `state` and reverting.
double OneShotGainAt(const StageGame& game, const SignalStructure& signals,
                     const PublicStrategyAutomaton& automaton,
                     const ValueTable& values, int player, int state,
                     int action);

DeviationGain OneShotDeviationGain(const StageGame& game,
                                   const SignalStructure& signals,
                                   const PublicStrategyAutomaton& automaton,
                                   const ValueTable& values, StateScope scope);
DeviationGain OneShotDeviationGain(
    const StageGame& game, const SignalStructure& signals,
    const PublicStrategyAutomaton& automaton, double delta,
    StateScope scope = StateScope::kTransitionReachable);

// delta / (1 - delta) * (eps + gamma).
double AntiFolkBound(double delta, const PrivacyParams& params);

}  // namespace dprepeat

#endif  // DPREPEAT_REPEATED_DEVIATION_H_
