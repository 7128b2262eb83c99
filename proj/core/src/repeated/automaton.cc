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

#include "dprepeat/repeated/automaton.h"

#include <string>

#include "dprepeat/errors.h"

namespace dprepeat {

void PublicStrategyAutomaton::Validate(const OutcomeSpace& outcomes,
                                       int num_signals) const {
  const int w = num_states();
  Require(w >= 1, "automaton needs at least one state");
  Require(initial >= 0 && initial < w, "initial state out of range");
  Require(static_cast<int>(transition.size()) == w,
          "transition table needs one row per state");
  for (int s = 0; s < w; ++s) {
    Require(static_cast<int>(decision[s].size()) == outcomes.num_players(),
            "decision rule needs one mixed action per player");
    for (int i = 0; i < outcomes.num_players(); ++i) {
      Require(static_cast<int>(decision[s][i].size()) ==
                  outcomes.num_actions(i),
              "decision rule has the wrong action count");
      CheckDistribution(decision[s][i], "decision rule");
    }
    Require(static_cast<int>(transition[s].size()) == num_signals,
            "transition row of state " + std::to_string(s) +
                " does not match the signal alphabet");
    for (int next : transition[s]) {
      Require(next >= 0 && next < w, "transition target out of range");
    }
  }
}

void StrategyProfile::Validate(const OutcomeSpace& outcomes,
                               int num_signals) const {
  Require(num_players() == outcomes.num_players(),
          "strategy profile needs one automaton per player");
  for (int i = 0; i < num_players(); ++i) {
    const PlayerAutomaton& p = players[i];
    const int w = p.num_states();
    Require(w >= 1, "automaton needs at least one state");
    Require(p.initial >= 0 && p.initial < w, "initial state out of range");
    Require(static_cast<int>(p.transition.size()) == w,
            "transition table needs one row per state");
    for (int s = 0; s < w; ++s) {
      Require(static_cast<int>(p.decision[s].size()) == outcomes.num_actions(i),
              "decision rule has the wrong action count");
      CheckDistribution(p.decision[s], "decision rule");
      Require(static_cast<int>(p.transition[s].size()) ==
                  outcomes.num_actions(i),
              "transition needs one row per own action");
      for (const auto& row : p.transition[s]) {
        Require(static_cast<int>(row.size()) == num_signals,
                "transition row does not match the signal alphabet");
        for (int next : row) {
          Require(next >= 0 && next < w, "transition target out of range");
        }
      }
    }
  }
}

StrategyProfile ToStrategyProfile(const PublicStrategyAutomaton& automaton) {
  StrategyProfile profile;
  const int w = automaton.num_states();
  const int n = w == 0 ? 0 : static_cast<int>(automaton.decision[0].size());
  for (int i = 0; i < n; ++i) {
    PlayerAutomaton p;
    p.initial = automaton.initial;
    for (int s = 0; s < w; ++s) {
      p.decision.push_back(automaton.decision[s][i]);
      const int k = static_cast<int>(automaton.decision[s][i].size());
      p.transition.emplace_back(k, automaton.transition[s]);
    }
    profile.players.push_back(std::move(p));
  }
  return profile;
}

JointStateSpace::JointStateSpace(const StrategyProfile& strategies) {
  std::vector<int> initial;
  for (const PlayerAutomaton& p : strategies.players) {
    counts_.push_back(p.num_states());
    size_ *= p.num_states();
    initial.push_back(p.initial);
  }
  initial_ = Encode(initial);
}

std::int64_t JointStateSpace::Encode(std::span<const int> states) const {
  std::int64_t index = 0;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    index = index * counts_[j] + states[j];
  }
  return index;
}

std::vector<int> JointStateSpace::Decode(std::int64_t index) const {
  std::vector<int> states(counts_.size());
  for (int j = static_cast<int>(counts_.size()) - 1; j >= 0; --j) {
    states[j] = static_cast<int>(index % counts_[j]);
    index /= counts_[j];
  }
  return states;
}

namespace {

using nlohmann::json;

PlayerAutomaton PlayerFromJson(const json& doc) {
  PlayerAutomaton p;
  p.initial = doc.value("initial", 0);
  for (const json& state : doc.at("states")) {
    p.decision.push_back(state.at("play").get<std::vector<double>>());
    p.transition.push_back(
        state.at("next").get<std::vector<std::vector<int>>>());
  }
  return p;
}

}  // namespace

StrategyDocument StrategyFromJson(const json& doc) {
  StrategyDocument out;
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "public") {
      out.is_public = true;
      out.shared.initial = doc.value("initial", 0);
      for (const json& state : doc.at("states")) {
        out.shared.decision.push_back(
            state.at("play").get<std::vector<std::vector<double>>>());
        out.shared.transition.push_back(
            state.at("next").get<std::vector<int>>());
      }
      out.per_player = ToStrategyProfile(out.shared);
    } else if (kind == "per_player") {
      out.is_public = false;
      for (const json& player : doc.at("players")) {
        out.per_player.players.push_back(PlayerFromJson(player));
      }
    } else {
      Fail(ErrorKind::kParse, "strategy kind must be 'public' or 'per_player'");
    }
  } catch (const json::exception& e) {
    Fail(ErrorKind::kParse, std::string("malformed strategy: ") + e.what());
  }
  return out;
}

json ToJson(const PublicStrategyAutomaton& automaton) {
  json states = json::array();
  for (int s = 0; s < automaton.num_states(); ++s) {
    states.push_back(
        {{"play", automaton.decision[s]}, {"next", automaton.transition[s]}});
  }
  return {{"kind", "public"}, {"initial", automaton.initial}, {"states", states}};
}

json ToJson(const StrategyProfile& strategies) {
  json players = json::array();
  for (const PlayerAutomaton& p : strategies.players) {
    json states = json::array();
    for (int s = 0; s < p.num_states(); ++s) {
      states.push_back({{"play", p.decision[s]}, {"next", p.transition[s]}});
    }
    players.push_back({{"initial", p.initial}, {"states", states}});
  }
  return {{"kind", "per_player"}, {"players", players}};
}

}  // namespace dprepeat
