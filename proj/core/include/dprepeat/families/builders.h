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

#ifndef DPREPEAT_FAMILIES_BUILDERS_H_
#define DPREPEAT_FAMILIES_BUILDERS_H_

#include <optional>
#include <string>
#include <vector>

#include "dprepeat/families/sensitivity.h"
#include "dprepeat/game/signal_structure.h"
#include "dprepeat/game/stage_game.h"
#include "dprepeat/privacy/privacy_curve.h"

namespace dprepeat {

// Exact curves are skipped when outcomes x cells exceeds this.
inline constexpr std::int64_t kMaxExactCurveEntries = 5'000'000;

struct DiscretizationOptions {
  double grid_width = 0.1;
  double truncation = 4.0;
  bool exact = true;  // build the discretized structure and its exact curve
  EpsGrid eps_grid;
};

// A family member: the stage game and discretized signals when they fit the
// guards, the analytic Gaussian curve always, and the exact curve of the
// discretized structure when requested and affordable.
struct FamilyInstance {
  std::string family;
  int n = 0;
  double sensitivity = 0.0;  // L2 sensitivity behind the analytic curve
  double noise_std = 0.0;
  std::optional<double> exact_sensitivity;
  std::optional<StageGame> game;
  std::optional<SignalStructure> signals;
  PrivacyCurve analytic;
  std::optional<PrivacyCurve> exact;
  // How the realized payoffs relate to the signal.
  std::string payoff_consistency;
  std::vector<std::string> notes;
};

// u(C, m) = (2/3) m / (n - 1), u(D, m) = u(C, m) + 1/3, where m counts the
// other players choosing C (action 0). For n = 2 this is a prisoner's
// dilemma with payoffs 2/3, 0, 1, 1/3.
StageGame PublicGoodsGame(int n);

struct AnonymousSpec {
  int n = 2;
  int k = 2;
  double noise_std = 1.0;  // per histogram bin
  bool count_space = false;
  // Defaults to the public-goods rule (k = 2).
  StageGame::AnonymousRule rule;
  DiscretizationOptions discretization;

  void Validate() const;
};
FamilyInstance BuildAnonymousInstance(const AnonymousSpec& spec);

FamilyInstance BuildCournotInstance(const CournotSpec& spec,
                                    const DiscretizationOptions& options = {});
// Raw profit q_own * P(x) - q_own on the quantity grid.
StageGame CournotGame(const CournotSpec& spec);

struct CounterfactualSpec {
  StageGame base;
  double noise_std = 0.5;
  DiscretizationOptions discretization;
};
// Each player privately observes, for each own action, the payoff that
// action would have earned against the others' realized play, plus noise.
FamilyInstance BuildCounterfactualInstance(const CounterfactualSpec& spec);

}  // namespace dprepeat

#endif  // DPREPEAT_FAMILIES_BUILDERS_H_
