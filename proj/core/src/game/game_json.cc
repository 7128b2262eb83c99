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

#include "dprepeat/game/game_json.h"

#include <fstream>

#include "dprepeat/errors.h"

namespace dprepeat {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(const std::string& what) {
  Fail(ErrorKind::kParse, what);
}

const json& Field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    ParseFail(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

double Number(const json& v, const char* what) {
  if (!v.is_number()) ParseFail(std::string(what) + " must be a number");
  return v.get<double>();
}

std::vector<double> NumberArray(const json& v, const char* what) {
  if (!v.is_array()) ParseFail(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& x : v) out.push_back(Number(x, what));
  return out;
}

void ReadTensor(const json& node, int depth, int n,
                const std::vector<int>& counts, std::vector<double>& flat) {
  if (depth == n) {
    const std::vector<double> cell = NumberArray(node, "payoff cell");
    if (static_cast<int>(cell.size()) != n) {
      ParseFail("payoff cell must hold one payoff per player");
    }
    flat.insert(flat.end(), cell.begin(), cell.end());
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != counts[depth]) {
    ParseFail("payoff tensor level " + std::to_string(depth) +
              " must have one entry per action of that player");
  }
  for (const json& child : node) ReadTensor(child, depth + 1, n, counts, flat);
}

json WriteTensor(const StageGame& game, int depth, std::vector<int>& profile) {
  const int n = game.num_players();
  if (depth == n) {
    json cell = json::array();
    for (int i = 0; i < n; ++i) cell.push_back(game.Payoff(i, profile));
    return cell;
  }
  json level = json::array();
  for (int a = 0; a < game.num_actions(depth); ++a) {
    profile[depth] = a;
    level.push_back(WriteTensor(game, depth + 1, profile));
  }
  return level;
}

}  // namespace

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ParseFail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    ParseFail(path + ": " + e.what());
  }
}

SignalStructure SignalsFromJson(const json& doc,
                                const OutcomeSpace& outcomes) {
  const std::string kind = Field(doc, "kind").get<std::string>();
  SignalStructure::Kind k;
  if (kind == "public") {
    k = SignalStructure::Kind::kPublic;
  } else if (kind == "private") {
    k = SignalStructure::Kind::kPrivate;
  } else {
    ParseFail("signal kind must be 'public' or 'private'");
  }
  std::vector<std::string> labels;
  for (const json& l : Field(doc, "labels")) {
    labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  }
  const json& dist_doc = Field(doc, "dist");
  if (!dist_doc.is_object()) ParseFail("'dist' must map outcome keys");
  std::vector<std::vector<double>> dist(outcomes.size());
  std::vector<bool> seen(outcomes.size(), false);
  for (const auto& [key, row] : dist_doc.items()) {
    const std::int64_t o = outcomes.ParseKey(key);
    if (seen[o]) ParseFail("duplicate outcome key " + key);
    seen[o] = true;
    dist[o] = NumberArray(row, "signal distribution");
  }
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    if (!seen[o]) ParseFail("no signal distribution for " + outcomes.Key(o));
  }
  std::optional<ExPostPayoffs> expost;
  if (doc.contains("expost")) {
    expost.emplace();
    for (const json& per_player : doc.at("expost")) {
      std::vector<std::vector<double>> rows;
      for (const json& row : per_player) {
        rows.push_back(NumberArray(row, "ex-post payoff"));
      }
      expost->push_back(std::move(rows));
    }
  }
  try {
    return SignalStructure(outcomes, k, std::move(labels), std::move(dist),
                           std::move(expost));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kGuard) throw;
    ParseFail(std::string("invalid signal structure: ") + e.what());
  }
}

GameInstance InstanceFromJson(const json& doc) {
  try {
    const int n = Field(doc, "n").get<int>();
    const json& actions = Field(doc, "actions");
    if (!actions.is_array() || static_cast<int>(actions.size()) != n) {
      ParseFail("'actions' must list one action set per player");
    }
    std::vector<int> counts;
    for (const json& set : actions) {
      if (!set.is_array() || set.empty()) {
        ParseFail("every action set must be a nonempty array");
      }
      counts.push_back(static_cast<int>(set.size()));
    }
    const json& payoffs = Field(doc, "payoffs");
    GameInstance instance;
    if (payoffs.is_object()) {
      const json& table_doc = Field(payoffs, "anonymous");
      const int k = counts[0];
      for (int c : counts) {
        if (c != k) ParseFail("anonymous games share one action set");
      }
      const OutcomeSpace others = OutcomeSpace::Histograms(n - 1, k);
      std::vector<std::vector<double>> table(
          k, std::vector<double>(others.size(), 0.0));
      std::vector<bool> seen(others.size(), false);
      for (const auto& [key, row] : table_doc.items()) {
        const std::int64_t r = others.ParseKey(key);
        const std::vector<double> values = NumberArray(row, "payoff row");
        if (static_cast<int>(values.size()) != k) {
          ParseFail("anonymous payoff row needs one value per own action");
        }
        seen[r] = true;
        for (int a = 0; a < k; ++a) table[a][r] = values[a];
      }
      for (std::int64_t r = 0; r < others.size(); ++r) {
        if (!seen[r]) ParseFail("missing anonymous payoffs for " + others.Key(r));
      }
      instance.game = StageGame::Anonymous(n, k, std::move(table));
    } else {
      std::vector<double> flat;
      ReadTensor(payoffs, 0, n, counts, flat);
      instance.game = StageGame::Explicit(counts, std::move(flat));
    }
    if (doc.contains("signals")) {
      json signals_doc = doc.at("signals");
      if (doc.contains("expost") && !signals_doc.contains("expost")) {
        signals_doc["expost"] = doc.at("expost");
      }
      instance.signals = SignalsFromJson(signals_doc, instance.game.outcomes());
    }
    return instance;
  } catch (const json::exception& e) {
    ParseFail(std::string("malformed game document: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kGuard || e.kind() == ErrorKind::kParse) throw;
    ParseFail(std::string("invalid game document: ") + e.what());
  }
}

GameInstance LoadInstance(const std::string& path) {
  return InstanceFromJson(ReadJsonFile(path));
}

json ToJson(const StageGame& game) {
  json doc;
  const int n = game.num_players();
  doc["n"] = n;
  json actions = json::array();
  for (int i = 0; i < n; ++i) {
    json set = json::array();
    for (int a = 0; a < game.num_actions(i); ++a) set.push_back(std::to_string(a));
    actions.push_back(set);
  }
  doc["actions"] = actions;
  if (game.anonymous()) {
    const int k = game.num_actions(0);
    const OutcomeSpace others = OutcomeSpace::Histograms(n - 1, k);
    json table = json::object();
    for (std::int64_t r = 0; r < others.size(); ++r) {
      json row = json::array();
      for (int a = 0; a < k; ++a) row.push_back(game.anonymous_table()[a][r]);
      table[others.Key(r)] = row;
    }
    doc["payoffs"] = {{"anonymous", table}};
  } else {
    std::vector<int> profile(n, 0);
    doc["payoffs"] = WriteTensor(game, 0, profile);
  }
  if (!game.normalization().identity()) {
    doc["normalization"] = {{"scale", game.normalization().scale},
                            {"offset", game.normalization().offset}};
  }
  return doc;
}

json ToJson(const SignalStructure& signals) {
  json doc;
  doc["kind"] = signals.is_public() ? "public" : "private";
  doc["labels"] = signals.labels();
  json dist = json::object();
  for (std::int64_t o = 0; o < signals.outcomes().size(); ++o) {
    const auto row = signals.Distribution(o);
    dist[signals.outcomes().Key(o)] = std::vector<double>(row.begin(), row.end());
  }
  doc["dist"] = dist;
  if (signals.expost()) doc["expost"] = *signals.expost();
  return doc;
}

json ToJson(const GameInstance& instance) {
  json doc = ToJson(instance.game);
  if (instance.signals) {
    json signals = ToJson(*instance.signals);
    if (signals.contains("expost")) {
      doc["expost"] = signals["expost"];
      signals.erase("expost");
    }
    doc["signals"] = signals;
  }
  return doc;
}

}  // namespace dprepeat
