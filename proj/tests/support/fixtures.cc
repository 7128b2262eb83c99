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

#include "support/fixtures.h"

namespace dprepeat::testing {

StageGame PrisonersDilemma() {
  return StageGame::Explicit(
      {2, 2}, {2.0 / 3, 2.0 / 3, 0.0, 1.0, 1.0, 0.0, 1.0 / 3, 1.0 / 3});
}

SignalStructure PerfectMonitoring(const OutcomeSpace& outcomes) {
  const auto m = outcomes.size();
  std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
  std::vector<std::string> labels;
  for (std::int64_t o = 0; o < m; ++o) {
    dist[o][o] = 1.0;
    labels.push_back(outcomes.Key(o));
  }
  return SignalStructure(outcomes, SignalStructure::Kind::kPublic, labels,
                         dist);
}

SignalStructure DefectionAlarm(const OutcomeSpace& outcomes, double p_clean,
                               double p_dirty) {
  std::vector<std::vector<double>> dist;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    const auto c = outcomes.Coordinates(o);
    bool defect = false;
    if (outcomes.anonymous()) {
      defect = c[1] > 0;
    } else {
      for (int a : c) defect = defect || a != 0;
    }
    const double low = defect ? p_dirty : p_clean;
    dist.push_back({1.0 - low, low});
  }
  return SignalStructure(outcomes, SignalStructure::Kind::kPublic,
                         {"high", "low"}, dist);
}

PublicStrategyAutomaton GrimTriggerPublic(int num_signals, int clean_signal) {
  PublicStrategyAutomaton a;
  a.decision = {{{1.0, 0.0}, {1.0, 0.0}}, {{0.0, 1.0}, {0.0, 1.0}}};
  a.transition.assign(2, std::vector<int>(num_signals, 1));
  a.transition[0][clean_signal] = 0;
  return a;
}

SignalStructure NoisyOpponentSignals(double flip) {
  const auto outcomes = OutcomeSpace::Profiles({2, 2});
  std::vector<std::vector<double>> dist;
  for (std::int64_t o = 0; o < 4; ++o) {
    const auto a = outcomes.Coordinates(o);
    std::vector<double> row(4);
    for (int s0 = 0; s0 < 2; ++s0) {
      for (int s1 = 0; s1 < 2; ++s1) {
        const double p0 = s0 == a[1] ? 1.0 - flip : flip;
        const double p1 = s1 == a[0] ? 1.0 - flip : flip;
        row[s0 * 2 + s1] = p0 * p1;
      }
    }
    dist.push_back(row);
  }
  return SignalStructure(outcomes, SignalStructure::Kind::kPrivate,
                         {"calm", "alarm"}, dist);
}

StrategyProfile PrivateTrigger(int calm, int angry) {
  PlayerAutomaton p;
  p.decision.assign(2, {0.0, 0.0});
  p.decision[0][calm] = 1.0;
  p.decision[1][angry] = 1.0;
  p.transition = {{{0, 1}, {0, 1}}, {{1, 1}, {1, 1}}};
  return {{p, p}};
}

}  // namespace dprepeat::testing
