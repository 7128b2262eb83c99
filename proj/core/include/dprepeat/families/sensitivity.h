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

#ifndef DPREPEAT_FAMILIES_SENSITIVITY_H_
#define DPREPEAT_FAMILIES_SENSITIVITY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dprepeat/game/stage_game.h"

namespace dprepeat {

// One player switching actions moves 1/n of mass between two bins of the
// normalized histogram; in count space the move is one unit.
double HistogramSensitivity(int n, bool count_space = false);

inline constexpr std::int64_t kMaxSensitivityProfiles = 1'000'000;

// max |u_i(a_i, a_j, a_-ij) - u_i(a_i, a_j', a_-ij)| over i != j and all
// action choices, on the normalized payoff scale.
double MuSensitivity(const StageGame& game);

// A unilateral change moves the k counterfactual entries of each of the
// other n - 1 players by at most mu.
double CounterfactualSensitivity(int n, int k, double mu);

struct CournotSpec {
  int n = 10;
  int grid_points = 21;  // quantities j / (grid_points - 1)
  std::function<double(double)> demand = [](double x) { return 2.0 - x; };
  double log_shock_std = 0.25;
  // sup |P'/P| in closed form, when known; used as a cross-check.
  std::optional<double> log_derivative_sup;

  std::vector<double> Quantities() const;
  void Validate() const;
};

struct CournotSensitivityResult {
  double first_order = 0.0;  // (1/n) max |P'/P| by centered differences
  double exact = 0.0;        // max |log P(x') - log P(x)| over neighbors
  double closed_form = 0.0;  // (1/n) * log_derivative_sup, or NaN
};
CournotSensitivityResult CournotSensitivity(const CournotSpec& spec);

}  // namespace dprepeat

#endif  // DPREPEAT_FAMILIES_SENSITIVITY_H_
