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

#ifndef DPREPEAT_REPEATED_AUTOMATON_H_
#define DPREPEAT_REPEATED_AUTOMATON_H_

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "dprepeat/game/outcome_space.h"
#include "dprepeat/game/stage_game.h"

namespace dprepeat {

// A public strategy profile as one automaton shared by all players: the
// state is a function of the public signal history only.
struct PublicStrategyAutomaton {
  int initial = 0;
  // decision[state][player] -> mixed action of that player
  std::vector<std::vector<std::vector<double>>> decision;
  // transition[state][signal] -> next state
  std::vector<std::vector<int>> transition;

  int num_states() const { return static_cast<int>(decision.size()); }
  MixedProfile Profile(int state) const { return MixedProfile(decision[state]); }
  void Validate(const OutcomeSpace& outcomes, int num_signals) const;
};

// One player's automaton, updated by the player's own action and own
// observed signal (the contents of a private history).
struct PlayerAutomaton {
  int initial = 0;
  std::vector<std::vector<double>> decision;  // [state] -> mixed action
  // transition[state][own action][observed signal] -> next state
  std::vector<std::vector<std::vector<int>>> transition;

  int num_states() const { return static_cast<int>(decision.size()); }
};

// Per-player automata for general (history-dependent) strategies, under
// public or private monitoring.
struct StrategyProfile {
  std::vector<PlayerAutomaton> players;

  int num_players() const { return static_cast<int>(players.size()); }
  void Validate(const OutcomeSpace& outcomes, int num_signals) const;
  // Next state of `player` after playing `action` and observing `signal`.
  int Next(int player, int state, int action, int signal) const {
    return players[player].transition[state][action][signal];
  }
};

// Each player runs a copy of the shared automaton and ignores its own action.
StrategyProfile ToStrategyProfile(const PublicStrategyAutomaton& automaton);

// Dense index over joint states (w_1, ..., w_n), player 0 most significant.
class JointStateSpace {
 public:
  explicit JointStateSpace(const StrategyProfile& strategies);

  std::int64_t size() const { return size_; }
  std::int64_t Encode(std::span<const int> states) const;
  std::vector<int> Decode(std::int64_t index) const;
  std::int64_t Initial() const { return initial_; }

 private:
  std::vector<int> counts_;
  std::int64_t size_ = 1;
  std::int64_t initial_ = 0;
};

// Strategy interchange format:
//   {"kind": "public", "initial": 0,
//    "states": [{"play": [[p...] per player], "next": [w per signal]}, ...]}
//   {"kind": "per_player",
//    "players": [{"initial": 0,
//                 "states": [{"play": [p...],
//                             "next": [[w per signal] per own action]}]}]}
struct StrategyDocument {
  bool is_public = true;
  PublicStrategyAutomaton shared;
  StrategyProfile per_player;
};
StrategyDocument StrategyFromJson(const nlohmann::json& doc);
nlohmann::json ToJson(const PublicStrategyAutomaton& automaton);
nlohmann::json ToJson(const StrategyProfile& strategies);

// Calls visit(profile, probability) for every pure profile with positive
// probability under independent mixing. `mixed[j]` is player j's mixture.
template <class Visit>
void ForEachPureProfile(std::span<const std::span<const double>> mixed,
                        Visit&& visit) {
  const int n = static_cast<int>(mixed.size());
  std::vector<std::vector<int>> support(n);
  for (int j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < mixed[j].size(); ++a) {
      if (mixed[j][a] > 0.0) support[j].push_back(static_cast<int>(a));
    }
    if (support[j].empty()) return;
  }
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> profile(n);
  while (true) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      profile[j] = support[j][cursor[j]];
      p *= mixed[j][profile[j]];
    }
    visit(std::span<const int>(profile), p);
    int j = n - 1;
    while (j >= 0 && ++cursor[j] == support[j].size()) cursor[j--] = 0;
    if (j < 0) break;
  }
}

}  // namespace dprepeat

#endif  // DPREPEAT_REPEATED_AUTOMATON_H_
