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

#include "dprepeat/repeated/public_verifiers.h"

#include <cmath>
#include <limits>

#include "dprepeat/errors.h"
#include "dprepeat/game/equilibrium.h"
#include "repeated/linear_system.h"

namespace dprepeat {
namespace {

constexpr double kUnknownProbability = std::numeric_limits<double>::quiet_NaN();

void RequirePublic(const SignalStructure& signals, int theorem) {
  if (!signals.is_public()) {
    Fail(ErrorKind::kIncompatible,
         "theorem " + std::to_string(theorem) +
             " applies to public monitoring; got a private signal structure");
  }
}

RegretEntry StateEntry(const StageGame& game,
                       const PublicStrategyAutomaton& automaton, int w) {
  const MixedProfile profile = automaton.Profile(w);
  const NashRegretReport nash = NashRegret(game, profile);
  RegretEntry e;
  e.state = "w" + std::to_string(w);
  e.player = nash.worst_player;
  e.regret = nash.max_regret;
  e.probability = kUnknownProbability;
  e.profile = profile.strategies();
  return e;
}

double PathProbability(const SignalStructure& signals,
                       const PublicStrategyAutomaton& automaton,
                       std::span<const int> history) {
  double p = 1.0;
  int w = automaton.initial;
  for (int s : history) {
    p *= SignalDistribution(signals, automaton.Profile(w))[s];
    w = automaton.transition[w][s];
  }
  return p;
}

}  // namespace

RegretReport StartReport(int theorem, double delta, const PrivacyCurve& curve,
                         const StageGame& game, const VerifyOptions& options) {
  CheckDiscount(delta);
  RegretReport r;
  r.instance = options.instance;
  r.theorem = theorem;
  r.delta = delta;
  r.slack_mode = options.slack;
  r.eps_star = curve.minimizer.eps;
  r.gamma_star = curve.minimizer.gamma;
  r.eta = AntiFolkBound(delta, {curve.minimizer.eps, curve.minimizer.gamma});
  r.normalization = game.normalization();
  return r;
}

RegretReport VerifyTheorem1(const StageGame& game,
                            const SignalStructure& signals,
                            const PublicStrategyAutomaton& automaton,
                            double delta, const PrivacyCurve& curve,
                            const VerifyOptions& options) {
  RequirePublic(signals, 1);
  RegretReport r = StartReport(1, delta, curve, game, options);
  const ValueTable values = SolveValuesPublic(game, signals, automaton, delta);
  const DeviationGain gain = OneShotDeviationGain(
      game, signals, automaton, values, StateScope::kTransitionReachable);
  r.xi_measured = gain.xi;
  r.xi = options.slack == SlackMode::kMeasured ? gain.xi : 0.0;
  const Reachability reach = TransitionReachableStates(automaton);
  for (int w = 0; w < automaton.num_states(); ++w) {
    if (!reach.reachable[w]) continue;
    RegretEntry e = StateEntry(game, automaton, w);
    Judge(r, e);
    r.per_state.push_back(std::move(e));
  }
  if (!r.informative()) {
    r.note = "adjusted bound >= 1: the privacy curve gives no restriction";
  }
  return r;
}

RegretReport VerifyTheorem3(const StageGame& game,
                            const SignalStructure& signals,
                            const PublicStrategyAutomaton& automaton,
                            double delta, const PrivacyCurve& curve,
                            const VerifyOptions& options) {
  RequirePublic(signals, 3);
  RegretReport r = StartReport(3, delta, curve, game, options);
  const ValueTable values = SolveValuesPublic(game, signals, automaton, delta);
  const DeviationGain gain = OneShotDeviationGain(game, signals, automaton,
                                                  values, StateScope::kOnPath);
  r.xi_measured = gain.xi;
  r.xi = options.slack == SlackMode::kMeasured ? gain.xi : 0.0;
  const Reachability reach = ReachableStates(game, signals, automaton);
  for (int w = 0; w < automaton.num_states(); ++w) {
    if (!reach.reachable[w]) continue;
    RegretEntry e = StateEntry(game, automaton, w);
    e.probability =
        PathProbability(signals, automaton, ShortestSignalPath(reach, w));
    Judge(r, e);
    if (!e.pass) {
      r.deviations.push_back(ConstructSingleHistoryDeviation(
          game, signals, automaton, values, reach, w, r.eta));
    }
    r.per_state.push_back(std::move(e));
  }
  if (!r.informative()) {
    r.note = "adjusted bound >= 1: the privacy curve gives no restriction";
  }
  return r;
}

double SingleHistoryDeviationGain(const StageGame& game,
                                  const SignalStructure& signals,
                                  const PublicStrategyAutomaton& automaton,
                                  double delta, std::span<const int> history,
                                  int player, int action) {
  const auto stages = PublicStages(game, signals, automaton);
  const ValueTable base = SolveValuesPublic(game, signals, automaton, delta);
  const int m = automaton.num_states();
  const int t = static_cast<int>(history.size());
  const int tracked = (t + 1) * m;  // (state, k) at index k * m + state
  const int size = tracked + m;     // then the off-history copy
  for (int s : history) {
    Require(s >= 0 && s < signals.num_signals(), "history signal out of range");
  }

  internal::DiscountedChain chain;
  chain.size = size;
  chain.transition.assign(size, std::vector<double>(size, 0.0));
  chain.reward.assign(1, std::vector<double>(size, 0.0));
  for (int w = 0; w < m; ++w) {
    const auto& next = automaton.transition[w];
    for (int k = 0; k < t; ++k) {
      const int row = k * m + w;
      chain.reward[0][row] = stages[w].payoffs[player];
      for (int s = 0; s < signals.num_signals(); ++s) {
        const int to = s == history[k] ? (k + 1) * m + next[s] : tracked + next[s];
        chain.transition[row][to] += stages[w].signals[s];
      }
    }
    const MixedProfile profile = automaton.Profile(w);
    const int row = t * m + w;
    chain.reward[0][row] = DeviationPayoff(game, profile, player, action);
    const auto dev = SignalDistribution(signals, profile, player, action);
    for (int s = 0; s < signals.num_signals(); ++s) {
      chain.transition[row][tracked + next[s]] += dev[s];
    }
    const int off = tracked + w;
    chain.reward[0][off] = stages[w].payoffs[player];
    for (int s = 0; s < signals.num_signals(); ++s) {
      chain.transition[off][tracked + next[s]] += stages[w].signals[s];
    }
  }
  const auto solved = internal::SolveDiscountedChain(chain, delta);
  return solved.values[0][automaton.initial] -
         base.at(player, automaton.initial);
}

HistoryDeviation ConstructSingleHistoryDeviation(
    const StageGame& game, const SignalStructure& signals,
    const PublicStrategyAutomaton& automaton, const ValueTable& values,
    const Reachability& reach, int state, double eta) {
  const NashRegretReport nash = NashRegret(game, automaton.Profile(state));
  HistoryDeviation d;
  d.player = nash.worst_player;
  d.state = state;
  d.action = nash.best_response[d.player];
  d.history = ShortestSignalPath(reach, state);
  d.history_probability = PathProbability(signals, automaton, d.history);
  d.stage_regret = nash.max_regret;
  d.one_shot_gain = OneShotGainAt(game, signals, automaton, values, d.player,
                                  state, d.action);
  const double delta = values.delta;
  const double reach_weight =
      std::pow(delta, static_cast<double>(d.history.size())) *
      d.history_probability;
  d.predicted_gain = reach_weight * d.one_shot_gain;
  d.guaranteed_gain = reach_weight * (1.0 - delta) * (d.stage_regret - eta);
  d.realized_gain = SingleHistoryDeviationGain(
      game, signals, automaton, delta, d.history, d.player, d.action);
  return d;
}

}  // namespace dprepeat
