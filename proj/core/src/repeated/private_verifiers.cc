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

#include "dprepeat/repeated/private_verifiers.h"

#include <algorithm>
#include <string>

#include "dprepeat/errors.h"
#include "dprepeat/game/equilibrium.h"
#include "dprepeat/game/monitoring_checks.h"

namespace dprepeat {
namespace {

MixedProfile ProfileAt(const StrategyProfile& strategies,
                       const std::vector<int>& states) {
  std::vector<std::vector<double>> mixed;
  for (int i = 0; i < strategies.num_players(); ++i) {
    mixed.push_back(strategies.players[i].decision[states[i]]);
  }
  return MixedProfile(std::move(mixed));
}

std::string TruncationNote(int horizon) {
  return "necessary-condition check at horizon " + std::to_string(horizon);
}

// Measured slack over private histories up to `horizon`.
double MeasureHistorySlack(const StageGame& game,
                           const SignalStructure& signals,
                           const StrategyProfile& strategies, double delta,
                           int horizon) {
  const ValueTable values =
      SolveJointValues(game, signals, strategies, delta);
  double xi = 0.0;
  for (const auto& belief :
       TrackBeliefs<double>(game, signals, strategies, horizon)) {
    xi = std::max(xi, HistoryOneShotGain(game, signals, strategies, values,
                                         belief));
  }
  return xi;
}

}  // namespace

double HistoryDeviationValue(const StageGame& game,
                             const StrategyProfile& strategies,
                             const BeliefState<double>& belief, int action) {
  const int i = belief.player;
  double total = 0.0;
  for (const auto& [states, b] : belief.posterior) {
    const MixedProfile profile = ProfileAt(strategies, states);
    total += b * (DeviationPayoff(game, profile, i, action) -
                  ExpectedPayoff(game, profile, i));
  }
  return total;
}

HistoryRegret HistoryCorrelatedRegret(const StageGame& game,
                                      const StrategyProfile& strategies,
                                      const BeliefState<double>& belief) {
  HistoryRegret out;
  for (int a = 0; a < game.num_actions(belief.player); ++a) {
    const double v = HistoryDeviationValue(game, strategies, belief, a);
    if (v > out.regret) {
      out.regret = v;
      out.best_action = a;
    }
  }
  return out;
}

double HistoryOneShotGain(const StageGame& game,
                          const SignalStructure& signals,
                          const StrategyProfile& strategies,
                          const ValueTable& joint_values,
                          const BeliefState<double>& belief) {
  const JointStateSpace joint(strategies);
  const OutcomeSpace& space = game.outcomes();
  const double delta = joint_values.delta;
  const int n = strategies.num_players();
  const int i = belief.player;
  const auto& own = strategies.players[i];

  double comply = 0.0;
  for (const auto& [states, b] : belief.posterior) {
    comply += b * joint_values.at(i, joint.Encode(states));
  }
  double best = -1.0;
  std::vector<int> next(n);
  for (int a = 0; a < game.num_actions(i); ++a) {
    double value = 0.0;
    for (const auto& [states, b] : belief.posterior) {
      const MixedProfile profile = ProfileAt(strategies, states).WithPure(i, a);
      std::vector<std::span<const double>> mixed;
      for (int j = 0; j < n; ++j) mixed.push_back(profile.strategy(j));
      const auto& recorded = own.decision[states[i]];
      ForEachPureProfile(mixed, [&](std::span<const int> played, double p) {
        value += b * p * (1.0 - delta) * game.Payoff(i, played);
        const auto dist = signals.Distribution(space.Encode(played));
        for (std::int64_t pt = 0; pt < signals.num_points(); ++pt) {
          if (dist[pt] <= 0.0) continue;
          for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            next[j] = strategies.Next(j, states[j], played[j],
                                      signals.Observation(pt, j));
          }
          // The player's own record continues as if the prescribed mixture
          // had been played.
          for (std::size_t r = 0; r < recorded.size(); ++r) {
            if (recorded[r] <= 0.0) continue;
            next[i] = strategies.Next(i, states[i], static_cast<int>(r),
                                      signals.Observation(pt, i));
            value += b * p * dist[pt] * recorded[r] * delta *
                     joint_values.at(i, joint.Encode(next));
          }
        }
      });
    }
    best = std::max(best, value - comply);
  }
  return best;
}

RegretReport VerifyTheorem2(const StageGame& game,
                            const SignalStructure& signals,
                            const StrategyProfile& strategies, double delta,
                            const PrivacyCurve& curve, int horizon,
                            const VerifyOptions& options) {
  if (!signals.is_public()) {
    Fail(ErrorKind::kIncompatible,
         "VerifyTheorem2 needs public monitoring; got a private signal "
         "structure");
  }
  const FullSupport support = CheckFullSupport(signals);
  if (!support.holds) {
    Fail(ErrorKind::kZeroProbability,
         "signal " + std::to_string(support.signal) +
             " has probability zero at outcome " +
             signals.outcomes().Key(support.outcome) +
             "; conditioning on public histories needs full support");
  }
  RegretReport r = StartReport(2, delta, curve, game, options);
  r.horizon = horizon;
  const auto plays = EnumeratePublicPlay(game, signals, strategies, horizon);
  r.note = TruncationNote(horizon);
  if (options.slack == SlackMode::kMeasured) {
    const int measured = std::min(horizon, kMaxPrivateHorizon);
    r.xi_measured =
        MeasureHistorySlack(game, signals, strategies, delta, measured);
    r.xi = r.xi_measured;
    if (measured < horizon) {
      r.note += "; slack measured on histories up to horizon " +
                std::to_string(measured);
    }
  }
  for (const PublicHistoryPlay& play : plays) {
    const MixedProfile profile(play.sigma_hat);
    const NashRegretReport nash = NashRegret(game, profile);
    RegretEntry e;
    e.state = "s:" + PublicHistoryLabel(play.history);
    e.player = nash.worst_player;
    e.regret = nash.max_regret;
    e.probability = play.probability;
    e.profile = play.sigma_hat;
    Judge(r, e);
    r.per_state.push_back(std::move(e));
  }
  return r;
}

RegretReport VerifyTheorem4(const StageGame& game,
                            const SignalStructure& signals,
                            const StrategyProfile& strategies, double delta,
                            const PrivacyCurve& curve, int horizon,
                            const VerifyOptions& options) {
  if (signals.is_public()) {
    Fail(ErrorKind::kIncompatible,
         "VerifyTheorem4 needs private monitoring; got a public signal "
         "structure");
  }
  RegretReport r = StartReport(4, delta, curve, game, options);
  r.horizon = horizon;
  r.note = TruncationNote(horizon);
  const auto beliefs = TrackBeliefs<double>(game, signals, strategies, horizon);
  if (options.slack == SlackMode::kMeasured) {
    const ValueTable values =
        SolveJointValues(game, signals, strategies, delta);
    for (const auto& belief : beliefs) {
      r.xi_measured = std::max(
          r.xi_measured,
          HistoryOneShotGain(game, signals, strategies, values, belief));
    }
    r.xi = r.xi_measured;
  }
  for (const auto& belief : beliefs) {
    const HistoryRegret regret =
        HistoryCorrelatedRegret(game, strategies, belief);
    RegretEntry e;
    e.state = "p" + std::to_string(belief.player) + "|" +
              belief.history.Label();
    e.player = belief.player;
    e.regret = regret.regret;
    e.probability = belief.probability;
    e.profile = {strategies.players[belief.player].decision[belief.own_state]};
    Judge(r, e);
    r.per_state.push_back(std::move(e));
  }
  return r;
}

}  // namespace dprepeat
