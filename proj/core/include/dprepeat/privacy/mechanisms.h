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

#ifndef DPREPEAT_PRIVACY_MECHANISMS_H_
#define DPREPEAT_PRIVACY_MECHANISMS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dprepeat/game/signal_structure.h"

namespace dprepeat {

struct PrivacyParams {
  double eps = 0.0;
  double gamma = 0.0;

  // Throws unless eps >= 0 and gamma in [0, 1].
  void Validate() const;
};

// A statistic f: T^n -> R^d whose value moves by at most `l2` in Euclidean
// norm (and optionally `l1` in L1 norm) when one player changes type.
struct SensitivitySpec {
  int dimension = 1;
  double l2 = 0.0;
  std::optional<double> l1;
};

// Gaussian noise scale that makes f + N(0, sigma^2 I) (eps, gamma)-private:
// sigma = (s / eps) * sqrt(log(1.25 / gamma)). Requires eps, gamma in (0,1).
double GaussianSigma(const SensitivitySpec& sens, double eps, double gamma);

// The same calibration solved for gamma at a fixed noise scale:
// gamma(eps) = min(1, 1.25 exp(-(noise_std * eps / s)^2)). The calibration is
// only licensed for eps < 1; for larger eps the value at eps = 1 is returned,
// which stays valid because gamma* is nonincreasing in eps. s = 0 gives 0.
double GaussianGamma(double l2_sensitivity, double noise_std, double eps);

// k-fold composition of (eps_each, gamma_each)-private components:
// eps = sqrt(2 log(1/gamma_slack) k) eps_each + k eps_each (e^eps_each - 1),
// gamma = gamma_slack + k gamma_each (clipped at 1).
PrivacyParams ComposeAdvanced(int k, double eps_each, double gamma_each,
                              double gamma_slack);

// Coordinatewise sums, gamma clipped at 1.
PrivacyParams ComposeBasic(std::span<const PrivacyParams> parts);

// Observing a uniformly random k-subset of n actions: (0, k/n).
PrivacyParams SubsamplePrivacy(int k, int n);

struct LaplaceCalibration {
  double scale = 0.0;  // b = l1 / eps
  PrivacyParams params;
};
LaplaceCalibration LaplacePrivacy(double l1_sensitivity, double eps);

// Pushes each distribution forward through merge_map (signal -> coarse
// signal). Private structures are coarsened componentwise.
SignalStructure CoarsenSignals(const SignalStructure& signals,
                               std::span<const int> merge_map,
                               std::vector<std::string> coarse_labels = {});

// Two independent public structures over the same outcomes observed
// together; the product signal (s, t) has index s * |T| + t.
SignalStructure ProductStructure(const SignalStructure& first,
                                 const SignalStructure& second);

}  // namespace dprepeat

#endif  // DPREPEAT_PRIVACY_MECHANISMS_H_
