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

// Independent brute-force recomputations used as test oracles. None of these
// calls the library routine it checks.

#ifndef DPREPEAT_TESTS_SUPPORT_ORACLES_H_
#define DPREPEAT_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/rational.h"
#include "dprepeat/repeated/automaton.h"
#include "support/random_instances.h"

namespace dprepeat::testing {

// Every ordered pair of outcomes that differ by one player's action,
// enumerated from scratch: profiles for explicit games, unit moves between
// histogram bins for anonymous ones.
std::vector<std::pair<std::int64_t, std::int64_t>> NeighborPairsOracle(
    const OutcomeSpace& outcomes);

// max(0, max over neighbor pairs and all 2^|points| events E of
// P(E) - ratio * Q(E)), clipped at 1.
double EventGammaOracle(const SignalStructure& signals, double ratio);
Rational EventGammaOracleExact(const SignalStructure& signals,
                               const Rational& ratio);

// All pure profiles of the given action counts, player 0 most significant.
std::vector<std::vector<int>> AllProfiles(const std::vector<int>& counts);

double ExpectedPayoffOracle(const StageGame& game, const MixedProfile& profile,
                            int player);
double NashRegretOracle(const StageGame& game, const MixedProfile& profile);

// Values by repeated application of the Bellman operator.
std::vector<std::vector<double>> ValueIterationOracle(
    const StageGame& game, const SignalStructure& signals,
    const PublicStrategyAutomaton& automaton, double delta, int iterations);

// States visited in `rollouts` simulated runs of `length` periods.
std::vector<bool> MonteCarloReachability(
    const StageGame& game, const SignalStructure& signals,
    const PublicStrategyAutomaton& automaton, Rng& rng, int rollouts,
    int length);

// One joint path: every player's action and every player's observation in
// each period, with its probability.
struct JointPath {
  std::vector<std::vector<int>> actions;       // [period][player]
  std::vector<std::vector<int>> observations;  // [period][player]
  std::vector<std::vector<int>> states;        // [period + 1][player]
  Rational probability;
};

// Enumerates every joint (pure profile, signal point) path of `periods`
// periods with positive probability, in exact arithmetic.
std::vector<JointPath> EnumerateJointPaths(const StageGame& game,
                                           const SignalStructure& signals,
                                           const StrategyProfile& strategies,
                                           int periods);

// Posterior over joint state vectors given player i's own record, summed
// over joint paths.
std::map<std::vector<int>, Rational> PosteriorOracle(
    const std::vector<JointPath>& paths, int player,
    const std::vector<int>& actions, const std::vector<int>& observations);

// Day-t play of each player given a public history: the player's own-action
// histories are weighted by their conditional probability (the per-player
// factor D_j of the product decomposition) and mapped through the player's
// strategy.
std::vector<std::vector<Rational>> SigmaHatOracle(
    const std::vector<JointPath>& paths, const StrategyProfile& strategies,
    const std::vector<int>& public_history);

}  // namespace dprepeat::testing

#endif  // DPREPEAT_TESTS_SUPPORT_ORACLES_H_
