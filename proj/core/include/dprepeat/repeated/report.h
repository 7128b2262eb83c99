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

#ifndef DPREPEAT_REPEATED_REPORT_H_
#define DPREPEAT_REPEATED_REPORT_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dprepeat/game/stage_game.h"

namespace dprepeat {

inline constexpr double kVerdictTolerance = 1e-9;

// Where the one-shot slack xi comes from. Claimed mode takes the supplied
// profile to be an exact equilibrium (xi = 0); measured mode computes xi.
enum class SlackMode { kMeasured, kClaimed };
const char* SlackModeName(SlackMode mode);
SlackMode ParseSlackMode(const std::string& text);

struct RegretEntry {
  std::string state;     // automaton state or history label
  int player = -1;       // player attaining the regret
  double regret = 0.0;
  double bound = 0.0;    // eta + xi_+ / (1 - delta)
  bool pass = true;
  double probability = 1.0;  // on-path probability of the history, if known
  std::vector<std::vector<double>> profile;  // stage profile examined
};

// The single-history deviation built when a reachable state breaks the bound:
// play `action` once after `history` and revert.
struct HistoryDeviation {
  int player = -1;
  int state = -1;
  int action = -1;
  std::vector<int> history;
  double history_probability = 0.0;
  double stage_regret = 0.0;
  double one_shot_gain = 0.0;    // per-period gain at the state
  double predicted_gain = 0.0;   // delta^T * Pr[history] * one_shot_gain
  double realized_gain = 0.0;    // from solving the deviating chain
  double guaranteed_gain = 0.0;  // delta^T * Pr * (1 - delta)(regret - eta)
  bool profitable() const { return realized_gain > 0.0; }
};

struct RegretReport {
  std::string instance;
  int theorem = 1;
  double delta = 0.0;
  double eta = 0.0;
  double eps_star = 0.0;
  double gamma_star = 0.0;
  SlackMode slack_mode = SlackMode::kMeasured;
  double xi = 0.0;           // slack used in the bound
  double xi_measured = 0.0;  // measured one-shot gain, reported in both modes
  int horizon = 0;           // 0 when no truncation applies
  AffineMap normalization;
  std::string note;
  std::vector<RegretEntry> per_state;
  std::vector<HistoryDeviation> deviations;

  double adjusted_bound() const;
  bool informative() const { return adjusted_bound() < 1.0; }
  int violations() const;
  bool passed() const { return violations() == 0; }
};

// Fills bound and pass on an entry from the report's eta, xi and delta.
void Judge(const RegretReport& report, RegretEntry& entry);

nlohmann::json ToJson(const RegretReport& report);
// One row per entry.
std::string ToCsv(const RegretReport& report);

}  // namespace dprepeat

#endif  // DPREPEAT_REPEATED_REPORT_H_
