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

// Conditioning on histories: the day-t play distribution given a public
// signal history, and each player's posterior over the other players'
// automaton states given a private history. Both are forward filters over
// joint automaton states and are exact when instantiated with Rational.

#ifndef DPREPEAT_REPEATED_HISTORY_H_
#define DPREPEAT_REPEATED_HISTORY_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/repeated/automaton.h"

namespace dprepeat {

inline constexpr int kMaxPublicHorizon = 8;
inline constexpr int kMaxPrivateHorizon = 6;
inline constexpr std::int64_t kMaxJointPaths = 10'000'000;

// Number of joint (pure profile, signal point) paths over `horizon - 1`
// periods, saturating just above kMaxJointPaths.
std::int64_t JointPathCount(const SignalStructure& signals, int horizon);
void CheckHorizon(const SignalStructure& signals, int horizon,
                  int max_horizon);

// A player's own record: the action played and the signal observed in each
// past period.
struct PrivateHistory {
  std::vector<int> actions;
  std::vector<int> signals;

  int length() const { return static_cast<int>(actions.size()); }
  std::string Label() const;  // "-" when empty, else "a0s1.a1s0"
};

std::string PublicHistoryLabel(std::span<const int> history);

template <class Scalar>
struct PlayDistribution {
  std::vector<std::vector<Scalar>> sigma_hat;  // [player][action]
  Scalar probability{};                        // Pr[public history]
};

// Day-t action distribution of every player given only the public history.
// Throws kZeroProbability when the history has probability zero.
template <class Scalar>
PlayDistribution<Scalar> ConditionalPlayDistribution(
    const StageGame& game, const SignalStructure& signals,
    const StrategyProfile& strategies, std::span<const int> public_history);

template <class Scalar>
struct BeliefState {
  int player = 0;
  PrivateHistory history;
  int own_state = 0;
  Scalar probability{};  // Pr[history]
  // Posterior over joint state vectors; entry `player` always equals
  // own_state. Sorted by state vector.
  std::vector<std::pair<std::vector<int>, Scalar>> posterior;
};

// Posteriors at every positive-probability private history of length
// 0 .. horizon - 1, ordered by player, then length, then history.
template <class Scalar>
std::vector<BeliefState<Scalar>> TrackBeliefs(const StageGame& game,
                                              const SignalStructure& signals,
                                              const StrategyProfile& strategies,
                                              int horizon);

// Posterior at one private history; throws kZeroProbability if the history
// cannot occur.
template <class Scalar>
BeliefState<Scalar> BeliefAt(const StageGame& game,
                             const SignalStructure& signals,
                             const StrategyProfile& strategies, int player,
                             const PrivateHistory& history);

struct PublicHistoryPlay {
  std::vector<int> history;
  double probability = 0.0;
  std::vector<std::vector<double>> sigma_hat;
};

// Every positive-probability public history of length 0 .. horizon - 1 in
// length-then-lexicographic order, with its conditional play distribution.
std::vector<PublicHistoryPlay> EnumeratePublicPlay(
    const StageGame& game, const SignalStructure& signals,
    const StrategyProfile& strategies, int horizon);

}  // namespace dprepeat

#endif  // DPREPEAT_REPEATED_HISTORY_H_
