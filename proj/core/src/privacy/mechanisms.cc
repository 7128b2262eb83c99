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

#include "dprepeat/privacy/mechanisms.h"

#include <algorithm>
#include <cmath>

#include "dprepeat/errors.h"

namespace dprepeat {

void PrivacyParams::Validate() const {
  Require(std::isfinite(eps) && eps >= 0.0, "eps must be nonnegative");
  Require(gamma >= 0.0 && gamma <= 1.0, "gamma must lie in [0, 1]");
}

double GaussianSigma(const SensitivitySpec& sens, double eps, double gamma) {
  Require(eps > 0.0 && eps < 1.0, "Gaussian calibration needs eps in (0,1)");
  Require(gamma > 0.0 && gamma < 1.0,
          "Gaussian calibration needs gamma in (0,1)");
  Require(sens.l2 >= 0.0, "sensitivity must be nonnegative");
  return (sens.l2 / eps) * std::sqrt(std::log(1.25 / gamma));
}

double GaussianGamma(double l2_sensitivity, double noise_std, double eps) {
  Require(noise_std > 0.0, "noise_std must be positive");
  Require(l2_sensitivity >= 0.0, "sensitivity must be nonnegative");
  Require(eps >= 0.0, "eps must be nonnegative");
  if (l2_sensitivity == 0.0) return 0.0;
  const double x = noise_std * std::min(eps, 1.0) / l2_sensitivity;
  return std::min(1.0, 1.25 * std::exp(-x * x));
}

PrivacyParams ComposeAdvanced(int k, double eps_each, double gamma_each,
                              double gamma_slack) {
  Require(k >= 1, "composition needs k >= 1");
  Require(gamma_slack > 0.0 && gamma_slack <= 1.0,
          "gamma_slack must lie in (0, 1]");
  PrivacyParams{eps_each, gamma_each}.Validate();
  PrivacyParams out;
  out.eps = std::sqrt(2.0 * std::log(1.0 / gamma_slack) * k) * eps_each +
            k * eps_each * std::expm1(eps_each);
  out.gamma = std::min(1.0, gamma_slack + k * gamma_each);
  return out;
}

PrivacyParams ComposeBasic(std::span<const PrivacyParams> parts) {
  Require(!parts.empty(), "composition needs at least one component");
  PrivacyParams out;
  for (const PrivacyParams& p : parts) {
    p.Validate();
    out.eps += p.eps;
    out.gamma += p.gamma;
  }
  out.gamma = std::min(1.0, out.gamma);
  return out;
}

PrivacyParams SubsamplePrivacy(int k, int n) {
  Require(n >= 1, "population must be nonempty");
  Require(k >= 0 && k <= n, "subsample size must lie in [0, n]");
  return {0.0, static_cast<double>(k) / n};
}

LaplaceCalibration LaplacePrivacy(double l1_sensitivity, double eps) {
  Require(eps > 0.0, "Laplace calibration needs eps > 0");
  Require(l1_sensitivity >= 0.0, "sensitivity must be nonnegative");
  return {l1_sensitivity / eps, {eps, 0.0}};
}

SignalStructure CoarsenSignals(const SignalStructure& signals,
                               std::span<const int> merge_map,
                               std::vector<std::string> coarse_labels) {
  Require(static_cast<int>(merge_map.size()) == signals.num_signals(),
          "merge map must be total on the signal set");
  int coarse = 0;
  for (int c : merge_map) {
    Require(c >= 0, "merge map targets must be nonnegative");
    coarse = std::max(coarse, c + 1);
  }
  if (coarse_labels.empty()) {
    for (int c = 0; c < coarse; ++c) coarse_labels.push_back(std::to_string(c));
  }
  Require(static_cast<int>(coarse_labels.size()) >= coarse,
          "too few coarse labels");
  const int n = signals.outcomes().num_players();
  std::int64_t coarse_points = coarse;
  if (!signals.is_public()) {
    coarse_points = 1;
    for (int i = 0; i < n; ++i) coarse_points *= coarse;
  }
  std::vector<std::vector<double>> dist(
      signals.outcomes().size(), std::vector<double>(coarse_points, 0.0));
  for (std::int64_t point = 0; point < signals.num_points(); ++point) {
    std::int64_t target = 0;
    if (signals.is_public()) {
      target = merge_map[point];
    } else {
      for (int s : signals.Observations(point)) {
        target = target * coarse + merge_map[s];
      }
    }
    for (std::int64_t o = 0; o < signals.outcomes().size(); ++o) {
      dist[o][target] += signals.Prob(o, point);
    }
  }
  return SignalStructure(signals.outcomes(), signals.kind(),
                         std::move(coarse_labels), std::move(dist));
}

SignalStructure ProductStructure(const SignalStructure& first,
                                 const SignalStructure& second) {
  Require(first.is_public() && second.is_public(),
          "product composition is defined for public structures");
  Require(first.outcomes() == second.outcomes(),
          "composed structures must share the outcome space");
  std::vector<std::string> labels;
  for (const auto& a : first.labels()) {
    for (const auto& b : second.labels()) labels.push_back(a + "|" + b);
  }
  const int m = second.num_signals();
  std::vector<std::vector<double>> dist(first.outcomes().size());
  for (std::int64_t o = 0; o < first.outcomes().size(); ++o) {
    auto& row = dist[o];
    row.resize(labels.size());
    for (int s = 0; s < first.num_signals(); ++s) {
      for (int t = 0; t < m; ++t) {
        row[s * m + t] = first.Prob(o, s) * second.Prob(o, t);
      }
    }
  }
  return SignalStructure(first.outcomes(), SignalStructure::Kind::kPublic,
                         std::move(labels), std::move(dist));
}

}  // namespace dprepeat
