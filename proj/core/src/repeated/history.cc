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

#include "dprepeat/repeated/history.h"

#include <map>

#include "dprepeat/errors.h"
#include "dprepeat/rational.h"

namespace dprepeat {
namespace {

// Strategy and signal probabilities lifted into the working scalar.
template <class Scalar>
class LiftedModel {
 public:
  LiftedModel(const StageGame& game, const SignalStructure& signals,
              const StrategyProfile& strategies)
      : signals_(signals), strategies_(strategies) {
    Require(signals.outcomes() == game.outcomes(),
            "signal structure and game disagree on the outcome space");
    strategies.Validate(game.outcomes(), signals.num_signals());
    for (const PlayerAutomaton& p : strategies.players) {
      std::vector<std::vector<Scalar>> rows;
      for (const auto& d : p.decision) rows.push_back(LiftRow(d));
      decision_.push_back(std::move(rows));
    }
    for (const auto& row : signals.table()) table_.push_back(LiftRow(row));
  }

  int num_players() const { return strategies_.num_players(); }
  const Scalar& decision(int i, int w, int a) const {
    return decision_[i][w][a];
  }
  const std::vector<Scalar>& row(std::int64_t outcome) const {
    return table_[outcome];
  }
  const SignalStructure& signals() const { return signals_; }

  std::vector<int> Next(std::span<const int> states, std::span<const int> actions,
                        std::span<const int> observations) const {
    std::vector<int> next(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      next[i] = strategies_.Next(static_cast<int>(i), states[i], actions[i],
                                 observations[i]);
    }
    return next;
  }

  // visit(profile, probability) over pure profiles with positive weight.
  template <class Visit>
  void ForEachProfile(std::span<const int> states, Visit&& visit) const {
    const int n = num_players();
    std::vector<std::vector<int>> support(n);
    for (int i = 0; i < n; ++i) {
      const auto& d = decision_[i][states[i]];
      for (std::size_t a = 0; a < d.size(); ++a) {
        if (d[a] > Scalar(0)) support[i].push_back(static_cast<int>(a));
      }
    }
    std::vector<std::size_t> cursor(n, 0);
    std::vector<int> profile(n);
    while (true) {
      Scalar p(1);
      for (int i = 0; i < n; ++i) {
        profile[i] = support[i][cursor[i]];
        p *= decision_[i][states[i]][profile[i]];
      }
      visit(std::span<const int>(profile), p);
      int i = n - 1;
      while (i >= 0 && ++cursor[i] == support[i].size()) cursor[i--] = 0;
      if (i < 0) break;
    }
  }

  // visit(profile, point, observations, probability) over one period.
  template <class Visit>
  void ForEachStep(std::span<const int> states, Visit&& visit) const {
    const OutcomeSpace& space = signals_.outcomes();
    ForEachProfile(states, [&](std::span<const int> profile, const Scalar& p) {
      const auto& dist = row(space.Encode(profile));
      for (std::int64_t pt = 0; pt < signals_.num_points(); ++pt) {
        if (!(dist[pt] > Scalar(0))) continue;
        visit(profile, pt, signals_.Observations(pt), Scalar(p * dist[pt]));
      }
    });
  }

  std::vector<int> InitialStates() const {
    std::vector<int> states;
    for (const PlayerAutomaton& p : strategies_.players) {
      states.push_back(p.initial);
    }
    return states;
  }

 private:
  static std::vector<Scalar> LiftRow(const std::vector<double>& row) {
    std::vector<Scalar> out;
    out.reserve(row.size());
    for (double v : row) out.push_back(Lift<Scalar>(v));
    return out;
  }

  const SignalStructure& signals_;
  const StrategyProfile& strategies_;
  std::vector<std::vector<std::vector<Scalar>>> decision_;
  std::vector<std::vector<Scalar>> table_;
};

template <class Scalar>
using StateWeights = std::map<std::vector<int>, Scalar>;

template <class Scalar>
Scalar Total(const StateWeights<Scalar>& weights) {
  Scalar total(0);
  for (const auto& [states, w] : weights) total += w;
  return total;
}

template <class Scalar>
BeliefState<Scalar> MakeBelief(int player, const std::vector<int>& key,
                               const StateWeights<Scalar>& weights) {
  BeliefState<Scalar> b;
  b.player = player;
  for (std::size_t k = 0; k < key.size(); k += 2) {
    b.history.actions.push_back(key[k]);
    b.history.signals.push_back(key[k + 1]);
  }
  b.probability = Total(weights);
  for (const auto& [states, w] : weights) {
    if (!(w > Scalar(0))) continue;
    b.own_state = states[player];
    b.posterior.emplace_back(states, Scalar(w / b.probability));
  }
  return b;
}

void RequirePublic(const SignalStructure& signals) {
  if (!signals.is_public()) {
    Fail(ErrorKind::kIncompatible,
         "conditioning on a public history needs public monitoring");
  }
}

}  // namespace

std::int64_t JointPathCount(const SignalStructure& signals, int horizon) {
  std::int64_t profiles = 1;
  for (int c : signals.outcomes().action_counts()) profiles *= c;
  const std::int64_t base = profiles * signals.num_points();
  std::int64_t count = 1;
  for (int t = 1; t < horizon; ++t) {
    if (count > kMaxJointPaths / base) return kMaxJointPaths + 1;
    count *= base;
  }
  return count;
}

void CheckHorizon(const SignalStructure& signals, int horizon,
                  int max_horizon) {
  Require(horizon >= 1, "horizon must be at least 1");
  if (horizon > max_horizon) {
    Fail(ErrorKind::kGuard, "horizon " + std::to_string(horizon) +
                                " exceeds the limit of " +
                                std::to_string(max_horizon));
  }
  if (JointPathCount(signals, horizon) > kMaxJointPaths) {
    Fail(ErrorKind::kGuard,
         "history enumeration would exceed 10^7 joint paths");
  }
}

std::string PrivateHistory::Label() const {
  if (actions.empty()) return "-";
  std::string out;
  for (int k = 0; k < length(); ++k) {
    if (k > 0) out += '.';
    out += 'a' + std::to_string(actions[k]) + 's' + std::to_string(signals[k]);
  }
  return out;
}

std::string PublicHistoryLabel(std::span<const int> history) {
  if (history.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < history.size(); ++k) {
    if (k > 0) out += '.';
    out += std::to_string(history[k]);
  }
  return out;
}

template <class Scalar>
PlayDistribution<Scalar> ConditionalPlayDistribution(
    const StageGame& game, const SignalStructure& signals,
    const StrategyProfile& strategies, std::span<const int> public_history) {
  RequirePublic(signals);
  const LiftedModel<Scalar> model(game, signals, strategies);
  StateWeights<Scalar> weights{{model.InitialStates(), Scalar(1)}};
  for (int s : public_history) {
    Require(s >= 0 && s < signals.num_signals(), "signal out of range");
    StateWeights<Scalar> next;
    for (const auto& [states, w] : weights) {
      model.ForEachStep(states, [&](std::span<const int> profile,
                                    std::int64_t pt, const std::vector<int>& obs,
                                    const Scalar& p) {
        if (pt != s) return;
        next[model.Next(states, profile, obs)] += w * p;
      });
    }
    weights = std::move(next);
  }
  PlayDistribution<Scalar> out;
  out.probability = Total(weights);
  if (!(out.probability > Scalar(0))) {
    Fail(ErrorKind::kZeroProbability,
         "public history " + PublicHistoryLabel(public_history) +
             " has probability zero");
  }
  const int n = model.num_players();
  out.sigma_hat.resize(n);
  for (int i = 0; i < n; ++i) {
    out.sigma_hat[i].assign(game.num_actions(i), Scalar(0));
  }
  for (const auto& [states, w] : weights) {
    const Scalar share = w / out.probability;
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < game.num_actions(i); ++a) {
        out.sigma_hat[i][a] += share * model.decision(i, states[i], a);
      }
    }
  }
  return out;
}

template <class Scalar>
std::vector<BeliefState<Scalar>> TrackBeliefs(const StageGame& game,
                                              const SignalStructure& signals,
                                              const StrategyProfile& strategies,
                                              int horizon) {
  CheckHorizon(signals, horizon, kMaxPrivateHorizon);
  const LiftedModel<Scalar> model(game, signals, strategies);
  std::vector<BeliefState<Scalar>> out;
  for (int i = 0; i < model.num_players(); ++i) {
    std::map<std::vector<int>, StateWeights<Scalar>> level;
    level[{}][model.InitialStates()] = Scalar(1);
    for (int t = 1; t <= horizon; ++t) {
      for (const auto& [key, weights] : level) {
        if (Total(weights) > Scalar(0)) {
          out.push_back(MakeBelief(i, key, weights));
        }
      }
      if (t == horizon) break;
      std::map<std::vector<int>, StateWeights<Scalar>> next;
      for (const auto& [key, weights] : level) {
        for (const auto& [states, w] : weights) {
          model.ForEachStep(states, [&](std::span<const int> profile,
                                        std::int64_t, const std::vector<int>& obs,
                                        const Scalar& p) {
            std::vector<int> extended = key;
            extended.push_back(profile[i]);
            extended.push_back(obs[i]);
            next[extended][model.Next(states, profile, obs)] += w * p;
          });
        }
      }
      level = std::move(next);
    }
  }
  return out;
}

template <class Scalar>
BeliefState<Scalar> BeliefAt(const StageGame& game,
                             const SignalStructure& signals,
                             const StrategyProfile& strategies, int player,
                             const PrivateHistory& history) {
  Require(history.actions.size() == history.signals.size(),
          "private history needs one signal per action");
  const LiftedModel<Scalar> model(game, signals, strategies);
  Require(player >= 0 && player < model.num_players(), "player out of range");
  StateWeights<Scalar> weights{{model.InitialStates(), Scalar(1)}};
  std::vector<int> key;
  for (int k = 0; k < history.length(); ++k) {
    StateWeights<Scalar> next;
    for (const auto& [states, w] : weights) {
      model.ForEachStep(states, [&](std::span<const int> profile,
                                    std::int64_t, const std::vector<int>& obs,
                                    const Scalar& p) {
        if (profile[player] != history.actions[k] ||
            obs[player] != history.signals[k]) {
          return;
        }
        next[model.Next(states, profile, obs)] += w * p;
      });
    }
    weights = std::move(next);
    key.push_back(history.actions[k]);
    key.push_back(history.signals[k]);
  }
  if (!(Total(weights) > Scalar(0))) {
    Fail(ErrorKind::kZeroProbability,
         "private history " + history.Label() + " of player " +
             std::to_string(player) + " has probability zero");
  }
  return MakeBelief(player, key, weights);
}

std::vector<PublicHistoryPlay> EnumeratePublicPlay(
    const StageGame& game, const SignalStructure& signals,
    const StrategyProfile& strategies, int horizon) {
  RequirePublic(signals);
  CheckHorizon(signals, horizon, kMaxPublicHorizon);
  const LiftedModel<double> model(game, signals, strategies);
  const int n = model.num_players();
  using Node = std::pair<std::vector<int>, StateWeights<double>>;
  std::vector<Node> level{{{}, {{model.InitialStates(), 1.0}}}};
  std::vector<PublicHistoryPlay> out;
  for (int t = 1; t <= horizon; ++t) {
    for (const auto& [history, weights] : level) {
      PublicHistoryPlay play;
      play.history = history;
      play.probability = Total(weights);
      play.sigma_hat.resize(n);
      for (int i = 0; i < n; ++i) {
        play.sigma_hat[i].assign(game.num_actions(i), 0.0);
      }
      for (const auto& [states, w] : weights) {
        for (int i = 0; i < n; ++i) {
          for (int a = 0; a < game.num_actions(i); ++a) {
            play.sigma_hat[i][a] +=
                w / play.probability * model.decision(i, states[i], a);
          }
        }
      }
      out.push_back(std::move(play));
    }
    if (t == horizon) break;
    std::vector<Node> next;
    for (const auto& [history, weights] : level) {
      std::vector<StateWeights<double>> children(signals.num_signals());
      for (const auto& [states, w] : weights) {
        model.ForEachStep(states, [&](std::span<const int> profile,
                                      std::int64_t pt,
                                      const std::vector<int>& obs,
                                      const double& p) {
          children[pt][model.Next(states, profile, obs)] += w * p;
        });
      }
      for (int s = 0; s < signals.num_signals(); ++s) {
        if (children[s].empty()) continue;
        std::vector<int> extended = history;
        extended.push_back(s);
        next.emplace_back(std::move(extended), std::move(children[s]));
      }
    }
    level = std::move(next);
  }
  return out;
}

#define DPREPEAT_INSTANTIATE(Scalar)                                        \
  template PlayDistribution<Scalar> ConditionalPlayDistribution<Scalar>(    \
      const StageGame&, const SignalStructure&, const StrategyProfile&,     \
      std::span<const int>);                                                \
  template std::vector<BeliefState<Scalar>> TrackBeliefs<Scalar>(           \
      const StageGame&, const SignalStructure&, const StrategyProfile&,     \
      int);                                                                 \
  template BeliefState<Scalar> BeliefAt<Scalar>(                            \
      const StageGame&, const SignalStructure&, const StrategyProfile&, int, \
      const PrivateHistory&);

DPREPEAT_INSTANTIATE(double)
DPREPEAT_INSTANTIATE(Rational)
#undef DPREPEAT_INSTANTIATE

}  // namespace dprepeat
