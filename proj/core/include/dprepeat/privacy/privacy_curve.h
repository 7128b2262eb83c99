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

#ifndef DPREPEAT_PRIVACY_PRIVACY_CURVE_H_
#define DPREPEAT_PRIVACY_PRIVACY_CURVE_H_

#include <functional>
#include <string>
#include <vector>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/privacy/mechanisms.h"

namespace dprepeat {

// Log-spaced evaluation grid for eps.
struct EpsGrid {
  double lo = 1e-4;
  double hi = 10.0;
  int count = 64;

  std::vector<double> Points() const;
  // "lo:hi:count", e.g. "1e-4:10:64".
  static EpsGrid Parse(const std::string& text);
};

enum class CurveProvenance { kExactFinite, kAnalyticGaussian };
const char* ProvenanceName(CurveProvenance provenance);

// Point of the curve minimizing eps + gamma(eps).
struct CurveMinimizer {
  double eps = 0.0;
  double gamma = 0.0;
  double sum() const { return eps + gamma; }
};

// The frontier eps -> gamma*(eps) sampled on a grid, plus its eps + gamma
// minimizer.
struct PrivacyCurve {
  std::string id;
  std::vector<double> eps;
  std::vector<double> gamma;
  CurveProvenance provenance = CurveProvenance::kExactFinite;
  CurveMinimizer minimizer;
};

// Golden-section tolerance on eps for the minimizer refinement.
inline constexpr double kMinimizerTolerance = 1e-9;

// Minimizes eps + gamma(eps): best grid point, then a golden-section search
// on the bracket around it. eps = 0 is also considered, so a structure that
// is exactly (0, gamma)-private reports that point.
CurveMinimizer MinimizeEpsPlusGamma(
    const std::function<double(double)>& gamma_of_eps,
    const std::vector<double>& grid);

// Exact curve of a finite structure via FiniteDpGamma.
PrivacyCurve ExactPrivacyCurve(const SignalStructure& signals,
                               const EpsGrid& grid = {}, std::string id = "");

// Analytic curve of f + N(0, noise_std^2 I) via GaussianGamma.
PrivacyCurve GaussianPrivacyCurve(const SensitivitySpec& sens,
                                  double noise_std, const EpsGrid& grid = {},
                                  std::string id = "");

// CSV with header "eps,gamma,provenance".
std::string CurveCsv(const PrivacyCurve& curve);

}  // namespace dprepeat

#endif  // DPREPEAT_PRIVACY_PRIVACY_CURVE_H_
