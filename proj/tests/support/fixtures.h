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

// Hand-built games, monitoring structures and automata shared by the tests.

#ifndef DPREPEAT_TESTS_SUPPORT_FIXTURES_H_
#define DPREPEAT_TESTS_SUPPORT_FIXTURES_H_

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/repeated/automaton.h"

namespace dprepeat::testing {

// Row payoffs (C,C)=2/3, (C,D)=0, (D,C)=1, (D,D)=1/3; action 0 is C.
StageGame PrisonersDilemma();

// Public signal = the realized profile.
SignalStructure PerfectMonitoring(const OutcomeSpace& outcomes);

// Two public signals; "low" (1) has probability `p_clean` when nobody
// defects and `p_dirty` otherwise.
SignalStructure DefectionAlarm(const OutcomeSpace& outcomes, double p_clean,
                               double p_dirty);

// Cooperate in state 0, move to the absorbing defection state 1 on any
// signal other than `clean_signal`.
PublicStrategyAutomaton GrimTriggerPublic(int num_signals, int clean_signal);

// Private monitoring for a two-player, two-action game: each player sees
// whether the opponent defected, flipped independently with probability
// `flip`.
SignalStructure NoisyOpponentSignals(double flip);

// Per-player trigger: play `calm` in state 0, switch for good to `angry`
// after observing signal 1.
StrategyProfile PrivateTrigger(int calm, int angry);

}  // namespace dprepeat::testing

#endif  // DPREPEAT_TESTS_SUPPORT_FIXTURES_H_
