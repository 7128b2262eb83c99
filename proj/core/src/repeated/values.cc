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

#include "dprepeat/repeated/values.h"

#include <cmath>
#include <string>

#include "dprepeat/errors.h"
#include "dprepeat/game/equilibrium.h"
#include "repeated/linear_system.h"

namespace dprepeat {

void CheckDiscount(double delta) {
  Require(std::isfinite(delta) && delta >= 0.0 && delta < 1.0,
          "discount factor must lie in [0, 1)");
}

std::vector<PublicStateStage> PublicStages(
    const StageGame& game, const SignalStructure& signals,
    const PublicStrategyAutomaton& automaton) {
  if (!signals.is_public()) {
    Fail(ErrorKind::kIncompatible,
         "public automata need a public signal structure");
  }
  Require(signals.outcomes() == game.outcomes(),
          "signal structure and game disagree on the outcome space");
  automaton.Validate(game.outcomes(), signals.num_signals());
  std::vector<PublicStateStage> stages;
  for (int w = 0; w < automaton.num_states(); ++w) {
    const MixedProfile profile = automaton.Profile(w);
    stages.push_back({ExpectedPayoffs(game, profile),
                      SignalDistribution(signals, profile)});
  }
  return stages;
}

ValueTable SolveValuesPublic(const StageGame& game,
                             const SignalStructure& signals,
                             const PublicStrategyAutomaton& automaton,
                             double delta) {
  CheckDiscount(delta);
  const auto stages = PublicStages(game, signals, automaton);
  const int m = automaton.num_states();
  const int n = game.num_players();

  internal::DiscountedChain chain;
  chain.size = m;
  chain.transition.assign(m, std::vector<double>(m, 0.0));
  chain.reward.assign(n, std::vector<double>(m, 0.0));
  for (int w = 0; w < m; ++w) {
    for (int s = 0; s < signals.num_signals(); ++s) {
      chain.transition[w][automaton.transition[w][s]] += stages[w].signals[s];
    }
    for (int i = 0; i < n; ++i) chain.reward[i][w] = stages[w].payoffs[i];
  }
  const auto solved = internal::SolveDiscountedChain(chain, delta);
  return {delta, solved.values, solved.residual};
}

ValueTable SolveJointValues(const StageGame& game,
                            const SignalStructure& signals,
                            const StrategyProfile& strategies, double delta) {
  CheckDiscount(delta);
  Require(signals.outcomes() == game.outcomes(),
          "signal structure and game disagree on the outcome space");
  strategies.Validate(game.outcomes(), signals.num_signals());
  const JointStateSpace joint(strategies);
  if (joint.size() > kMaxJointStates) {
    Fail(ErrorKind::kGuard, "joint automaton has " +
                                std::to_string(joint.size()) +
                                " states; the dense solver allows " +
                                std::to_string(kMaxJointStates));
  }
  const int m = static_cast<int>(joint.size());
  const int n = game.num_players();
  const OutcomeSpace& space = game.outcomes();

  internal::DiscountedChain chain;
  chain.size = m;
  chain.transition.assign(m, std::vector<double>(m, 0.0));
  chain.reward.assign(n, std::vector<double>(m, 0.0));
  std::vector<int> next(n);
  for (int index = 0; index < m; ++index) {
    const std::vector<int> states = joint.Decode(index);
    std::vector<std::span<const double>> mixed;
    for (int i = 0; i < n; ++i) {
      mixed.emplace_back(strategies.players[i].decision[states[i]]);
    }
    ForEachPureProfile(mixed, [&](std::span<const int> profile, double p) {
      const std::int64_t o = space.Encode(profile);
      for (int i = 0; i < n; ++i) {
        chain.reward[i][index] += p * game.Payoff(i, profile);
      }
      const auto dist = signals.Distribution(o);
      for (std::int64_t pt = 0; pt < signals.num_points(); ++pt) {
        if (dist[pt] <= 0.0) continue;
        for (int i = 0; i < n; ++i) {
          next[i] = strategies.Next(i, states[i], profile[i],
                                    signals.Observation(pt, i));
        }
        chain.transition[index][joint.Encode(next)] += p * dist[pt];
      }
    });
  }
  const auto solved = internal::SolveDiscountedChain(chain, delta);
  return {delta, solved.values, solved.residual};
}

}  // namespace dprepeat
