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

#include "dprepeat/repeated/report.h"

#include <algorithm>
#include <sstream>

#include "dprepeat/errors.h"
#include "dprepeat/format.h"

namespace dprepeat {

const char* SlackModeName(SlackMode mode) {
  return mode == SlackMode::kMeasured ? "measured" : "claimed";
}

SlackMode ParseSlackMode(const std::string& text) {
  if (text == "measured") return SlackMode::kMeasured;
  if (text == "claimed") return SlackMode::kClaimed;
  Fail(ErrorKind::kInvalidArgument,
       "slack mode must be 'measured' or 'claimed'");
}

double RegretReport::adjusted_bound() const {
  return eta + std::max(0.0, xi) / (1.0 - delta);
}

int RegretReport::violations() const {
  return static_cast<int>(std::count_if(
      per_state.begin(), per_state.end(),
      [](const RegretEntry& e) { return !e.pass; }));
}

void Judge(const RegretReport& report, RegretEntry& entry) {
  entry.bound = report.adjusted_bound();
  entry.pass = entry.regret <= entry.bound + kVerdictTolerance;
}

nlohmann::json ToJson(const RegretReport& report) {
  using nlohmann::json;
  json states = json::array();
  for (const RegretEntry& e : report.per_state) {
    json row = {{"state", e.state},     {"regret", e.regret},
                {"bound", e.bound},     {"pass", e.pass},
                {"player", e.player},   {"probability", e.probability},
                {"profile", e.profile}};
    states.push_back(std::move(row));
  }
  json deviations = json::array();
  for (const HistoryDeviation& d : report.deviations) {
    deviations.push_back({{"player", d.player},
                          {"state", d.state},
                          {"action", d.action},
                          {"history", d.history},
                          {"history_probability", d.history_probability},
                          {"stage_regret", d.stage_regret},
                          {"one_shot_gain", d.one_shot_gain},
                          {"predicted_gain", d.predicted_gain},
                          {"realized_gain", d.realized_gain},
                          {"guaranteed_gain", d.guaranteed_gain},
                          {"profitable", d.profitable()}});
  }
  json doc = {{"instance", report.instance},
              {"theorem", report.theorem},
              {"delta", report.delta},
              {"eta", report.eta},
              {"xi", report.xi},
              {"xi_measured", report.xi_measured},
              {"slack_mode", SlackModeName(report.slack_mode)},
              {"eps_star", report.eps_star},
              {"gamma_star", report.gamma_star},
              {"adjusted_bound", report.adjusted_bound()},
              {"informative", report.informative()},
              {"per_state", states},
              {"violations", report.violations()},
              {"verdict", report.passed() ? "pass" : "fail"}};
  if (report.horizon > 0) doc["horizon"] = report.horizon;
  if (!report.normalization.identity()) {
    doc["normalization"] = {{"scale", report.normalization.scale},
                            {"offset", report.normalization.offset}};
  }
  if (!report.deviations.empty()) doc["deviations"] = deviations;
  if (!report.note.empty()) doc["note"] = report.note;
  return doc;
}

std::string ToCsv(const RegretReport& report) {
  std::ostringstream out;
  out << "instance,theorem,state,player,regret,bound,pass,probability,eta,xi,"
         "delta\n";
  for (const RegretEntry& e : report.per_state) {
    out << report.instance << ',' << report.theorem << ',' << e.state << ','
        << e.player << ',' << FormatDouble(e.regret) << ','
        << FormatDouble(e.bound) << ',' << (e.pass ? "pass" : "fail") << ','
        << FormatDouble(e.probability) << ',' << FormatDouble(report.eta)
        << ',' << FormatDouble(report.xi) << ','
        << FormatDouble(report.delta) << '\n';
  }
  return out.str();
}

}  // namespace dprepeat
