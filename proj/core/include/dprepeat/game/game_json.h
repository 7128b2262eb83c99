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

#ifndef DPREPEAT_GAME_GAME_JSON_H_
#define DPREPEAT_GAME_GAME_JSON_H_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"

namespace dprepeat {

// Game/signal interchange format:
//
//   {"n": 2,
//    "actions": [["C", "D"], ["C", "D"]],
//    "payoffs": [[[u1, u2], [u1, u2]], [[u1, u2], [u1, u2]]],
//    "signals": {"kind": "public", "labels": ["lo", "hi"],
//                "dist": {"0,0": [0.9, 0.1], ...}},
//    "expost": [[[U_1(a_1, s) per s] per a_1] per player]}
//
// Explicit payoffs nest one array level per player (indexed by that
// player's action) around the per-player payoff vector. Anonymous games give
// "payoffs": {"anonymous": {"<others histogram>": [u(own action) ...]}}, and
// their signal keys are histograms of all players. Outcome keys are
// comma-joined action indices (or counts). Numbers are written as shortest
// round-trip decimals.
struct GameInstance {
  StageGame game;
  std::optional<SignalStructure> signals;
};

GameInstance InstanceFromJson(const nlohmann::json& doc);
GameInstance LoadInstance(const std::string& path);
// Parses a bare "signals" object (optionally carrying "expost") against an
// existing outcome space.
SignalStructure SignalsFromJson(const nlohmann::json& doc,
                                const OutcomeSpace& outcomes);

nlohmann::json ToJson(const StageGame& game);
nlohmann::json ToJson(const SignalStructure& signals);
nlohmann::json ToJson(const GameInstance& instance);

nlohmann::json ReadJsonFile(const std::string& path);

}  // namespace dprepeat

#endif  // DPREPEAT_GAME_GAME_JSON_H_
