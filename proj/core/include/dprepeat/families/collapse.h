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

#ifndef DPREPEAT_FAMILIES_COLLAPSE_H_
#define DPREPEAT_FAMILIES_COLLAPSE_H_

#include <optional>
#include <string>
#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/privacy/privacy_curve.h"
#include "dprepeat/repeated/automaton.h"

namespace dprepeat {

// Two public signals, 0 = "high" and 1 = "low". The announced histogram is
// thresholded on its cooperator-minus-defector difference halfway between
// full cooperation and a single defection:
//   P(low | m cooperators) = Phi(sqrt(2) (t - m/n) / noise_std),
//   t = 1 - 1/(2n).
// noise_std = 0 gives the noiseless indicator of any defection.
SignalStructure ThresholdSignals(int n, double noise_std);

// State 0 plays C and moves to state 1 on "low"; state 1 plays D forever.
PublicStrategyAutomaton GrimTrigger(int n);

struct CollapseSpec {
  double delta = 0.9;
  double noise_std = 0.1;
  int n_min = 2;
  int n_max = 16384;
  EpsGrid eps_grid;
};

struct CollapseRow {
  int n = 0;
  double p_low_comply = 0.0;   // all cooperate
  double p_low_deviate = 0.0;  // one defector
  double xi = 0.0;             // grim trigger one-shot gain
  bool supported = true;       // xi <= 1e-9
  double eta_analytic = 0.0;   // Gaussian curve, sensitivity sqrt(2)/n;
                               // infinite without noise
  double eta_exact = 0.0;      // exact curve of the two-signal structure
  double xi_perfect = 0.0;     // same automaton, noiseless signals
};

struct CollapseResult {
  CollapseSpec spec;
  double stage_gap = 1.0 / 3.0;  // gain from defecting against cooperation
  std::vector<CollapseRow> rows;
  std::optional<int> collapse_n;      // first n with xi > 1e-9
  std::optional<int> eta_below_gap_n;  // first n with eta_analytic < gap
  bool perfect_certified = true;       // xi_perfect <= 1e-9 at every n
  std::string note;
};

CollapseResult RunCollapseDemo(const CollapseSpec& spec);

}  // namespace dprepeat

#endif  // DPREPEAT_FAMILIES_COLLAPSE_H_
