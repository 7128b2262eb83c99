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

#include "dprepeat/repeated/deviation.h"

#include <algorithm>
#include <deque>

#include "dprepeat/errors.h"
#include "dprepeat/game/equilibrium.h"

namespace dprepeat {
namespace {

std::vector<bool> Closure(const std::vector<std::vector<int>>& edges,
                          int start) {
  std::vector<bool> seen(edges.size(), false);
  std::deque<int> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop_front();
    for (int v : edges[w]) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

// BFS over the graph whose edges are the (state, signal) pairs admitted by
// `admit`; records shortest-path parents and closed classes.
template <class Admit>
Reachability Explore(const PublicStrategyAutomaton& automaton, Admit admit) {
  const int m = automaton.num_states();
  std::vector<std::vector<int>> edges(m);
  for (int w = 0; w < m; ++w) {
    for (std::size_t s = 0; s < automaton.transition[w].size(); ++s) {
      if (admit(w, static_cast<int>(s))) {
        edges[w].push_back(automaton.transition[w][s]);
      }
    }
  }
  Reachability r;
  r.reachable.assign(m, false);
  r.recurrent.assign(m, false);
  r.depth.assign(m, -1);
  r.parent.assign(m, -1);
  r.parent_signal.assign(m, -1);
  std::deque<int> queue{automaton.initial};
  r.reachable[automaton.initial] = true;
  r.depth[automaton.initial] = 0;
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < automaton.transition[w].size(); ++s) {
      if (!admit(w, static_cast<int>(s))) continue;
      const int v = automaton.transition[w][s];
      if (r.reachable[v]) continue;
      r.reachable[v] = true;
      r.depth[v] = r.depth[w] + 1;
      r.parent[v] = w;
      r.parent_signal[v] = static_cast<int>(s);
      queue.push_back(v);
    }
  }
  std::vector<std::vector<bool>> closure(m);
  for (int w = 0; w < m; ++w) {
    if (r.reachable[w]) closure[w] = Closure(edges, w);
  }
  for (int w = 0; w < m; ++w) {
    if (!r.reachable[w]) continue;
    bool closed = true;
    for (int v = 0; v < m && closed; ++v) {
      if (closure[w][v] && !closure[v][w]) closed = false;
    }
    r.recurrent[w] = closed;
  }
  return r;
}

}  // namespace

Reachability ReachableStates(const StageGame& game,
                             const SignalStructure& signals,
                             const PublicStrategyAutomaton& automaton,
                             double threshold) {
  const auto stages = PublicStages(game, signals, automaton);
  return Explore(automaton, [&](int w, int s) {
    return threshold < 0.0 || stages[w].signals[s] > threshold;
  });
}

Reachability TransitionReachableStates(
    const PublicStrategyAutomaton& automaton) {
  return Explore(automaton, [](int, int) { return true; });
}

std::vector<int> ShortestSignalPath(const Reachability& reach, int state) {
  Require(reach.reachable[state], "state is not reachable");
  std::vector<int> path;
  for (int w = state; reach.parent[w] >= 0; w = reach.parent[w]) {
    path.push_back(reach.parent_signal[w]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

double Continuation(const ValueTable& values, int player,
                    const std::vector<int>& next,
                    const std::vector<double>& dist) {
  double total = 0.0;
  for (std::size_t s = 0; s < dist.size(); ++s) {
    total += dist[s] * values.at(player, next[s]);
  }
  return total;
}

double DeviateValue(const StageGame& game, const SignalStructure& signals,
                    const MixedProfile& profile, const std::vector<int>& next,
                    const ValueTable& values, int player, int action) {
  return (1.0 - values.delta) * DeviationPayoff(game, profile, player, action) +
         values.delta *
             Continuation(values, player, next,
                          SignalDistribution(signals, profile, player, action));
}

}  // namespace

double OneShotGainAt(const StageGame& game, const SignalStructure& signals,
                     const PublicStrategyAutomaton& automaton,
                     const ValueTable& values, int player, int state,
                     int action) {
  const MixedProfile profile = automaton.Profile(state);
  const auto& next = automaton.transition[state];
  const double comply =
      (1.0 - values.delta) * ExpectedPayoff(game, profile, player) +
      values.delta *
          Continuation(values, player, next, SignalDistribution(signals, profile));
  return DeviateValue(game, signals, profile, next, values, player, action) -
         comply;
}

DeviationGain OneShotDeviationGain(const StageGame& game,
                                   const SignalStructure& signals,
                                   const PublicStrategyAutomaton& automaton,
                                   const ValueTable& values, StateScope scope) {
  const Reachability reach = scope == StateScope::kOnPath
                                 ? ReachableStates(game, signals, automaton)
                                 : TransitionReachableStates(automaton);
  DeviationGain out;
  out.per_state.assign(automaton.num_states(), 0.0);
  for (int w = 0; w < automaton.num_states(); ++w) {
    if (!reach.reachable[w]) continue;
    const MixedProfile profile = automaton.Profile(w);
    const auto& next = automaton.transition[w];
    const std::vector<double> on_path = SignalDistribution(signals, profile);
    const std::vector<int> first =
        InterchangeablePlayers(game.outcomes(), profile);
    for (int i = 0; i < game.num_players(); ++i) {
      if (first[i] != i) continue;
      const double comply =
          (1.0 - values.delta) * ExpectedPayoff(game, profile, i) +
          values.delta * Continuation(values, i, next, on_path);
      for (int a = 0; a < game.num_actions(i); ++a) {
        const double g =
            DeviateValue(game, signals, profile, next, values, i, a) - comply;
        out.per_state[w] = std::max(out.per_state[w], g);
        if (g > out.xi) {
          out.xi = g;
          out.witness = {i, w, a};
        }
      }
    }
  }
  return out;
}

DeviationGain OneShotDeviationGain(const StageGame& game,
                                   const SignalStructure& signals,
                                   const PublicStrategyAutomaton& automaton,
                                   double delta, StateScope scope) {
  const ValueTable values = SolveValuesPublic(game, signals, automaton, delta);
  return OneShotDeviationGain(game, signals, automaton, values, scope);
}

double AntiFolkBound(double delta, const PrivacyParams& params) {
  CheckDiscount(delta);
  params.Validate();
  return delta / (1.0 - delta) * (params.eps + params.gamma);
}

}  // namespace dprepeat
