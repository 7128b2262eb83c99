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

// Seeded random instances for property tests and the acceptance suite.

#ifndef DPREPEAT_TESTS_SUPPORT_RANDOM_INSTANCES_H_
#define DPREPEAT_TESTS_SUPPORT_RANDOM_INSTANCES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/repeated/automaton.h"

namespace dprepeat::testing {

using Rng = std::mt19937_64;

int UniformInt(Rng& rng, int lo, int hi);  // inclusive
double Uniform(Rng& rng, double lo = 0.0, double hi = 1.0);

// Random probability vector. With `zero_prob` > 0 each entry is zeroed with
// that probability (at least one entry stays positive).
std::vector<double> RandomDistribution(Rng& rng, int size,
                                       double zero_prob = 0.0);
// Rounded to multiples of 1/64 so that sums are exact in binary.
std::vector<double> RandomDyadicDistribution(Rng& rng, int size,
                                             bool full_support);

StageGame RandomExplicitGame(Rng& rng, std::vector<int> action_counts);
MixedProfile RandomProfile(Rng& rng, const std::vector<int>& action_counts);

SignalStructure RandomPublicSignals(Rng& rng, const OutcomeSpace& outcomes,
                                    int num_signals, bool full_support,
                                    bool dyadic = false);
SignalStructure RandomPrivateSignals(Rng& rng, const OutcomeSpace& outcomes,
                                     int num_signals, bool full_support,
                                     bool dyadic = false);

// Discretized Gaussian noise on a per-profile statistic whose values differ
// by at most `spread`, cut into at most `max_signals` cells.
SignalStructure RandomGaussianSignals(Rng& rng, const OutcomeSpace& outcomes,
                                      double spread, double noise_std,
                                      int max_signals);

PublicStrategyAutomaton RandomPublicAutomaton(
    Rng& rng, const std::vector<int>& action_counts, int num_states,
    int num_signals, double pure_prob = 0.5, bool dyadic = false);

StrategyProfile RandomStrategyProfile(Rng& rng,
                                      const std::vector<int>& action_counts,
                                      int max_states, int num_signals,
                                      bool dyadic = false);

// Automaton that repeats one mixed profile forever.
PublicStrategyAutomaton Repeat(const MixedProfile& profile, int num_signals);

}  // namespace dprepeat::testing

#endif  // DPREPEAT_TESTS_SUPPORT_RANDOM_INSTANCES_H_
