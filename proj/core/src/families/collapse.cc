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

#include "dprepeat/families/collapse.h"

#include <cmath>
#include <limits>

#include "dprepeat/errors.h"
#include "dprepeat/families/builders.h"
#include "dprepeat/families/sensitivity.h"
#include "dprepeat/parallel.h"
#include "dprepeat/repeated/deviation.h"

namespace dprepeat {
namespace {

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double LowProbability(int n, double noise_std, int cooperators) {
  const double t = 1.0 - 1.0 / (2.0 * n);
  const double gap = t - static_cast<double>(cooperators) / n;
  if (noise_std == 0.0) return gap > 0.0 ? 1.0 : 0.0;
  return NormalCdf(std::sqrt(2.0) * gap / noise_std);
}

}  // namespace

SignalStructure ThresholdSignals(int n, double noise_std) {
  Require(n >= 2, "threshold signals need n >= 2");
  Require(std::isfinite(noise_std) && noise_std >= 0.0,
          "noise_std must be nonnegative");
  OutcomeSpace outcomes = OutcomeSpace::Histograms(n, 2);
  std::vector<std::vector<double>> dist;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    const double low = LowProbability(n, noise_std, outcomes.Coordinates(o)[0]);
    dist.push_back({1.0 - low, low});
  }
  return SignalStructure(std::move(outcomes), SignalStructure::Kind::kPublic,
                         {"high", "low"}, std::move(dist));
}

PublicStrategyAutomaton GrimTrigger(int n) {
  PublicStrategyAutomaton a;
  a.initial = 0;
  a.decision = {std::vector<std::vector<double>>(n, {1.0, 0.0}),
                std::vector<std::vector<double>>(n, {0.0, 1.0})};
  a.transition = {{0, 1}, {1, 1}};
  return a;
}

CollapseResult RunCollapseDemo(const CollapseSpec& spec) {
  CheckDiscount(spec.delta);
  Require(std::isfinite(spec.noise_std) && spec.noise_std >= 0.0,
          "noise_std must be nonnegative");
  Require(spec.n_min >= 2 && spec.n_max >= spec.n_min,
          "need 2 <= n_min <= n_max");
  std::vector<int> ns;
  for (int n = spec.n_min; n <= spec.n_max; n *= 2) ns.push_back(n);

  CollapseResult out;
  out.spec = spec;
  out.rows = ParallelMap(ns.size(), [&](std::size_t j) {
    const int n = ns[j];
    const StageGame game = PublicGoodsGame(n);
    const PublicStrategyAutomaton grim = GrimTrigger(n);
    const SignalStructure noisy = ThresholdSignals(n, spec.noise_std);
    CollapseRow row;
    row.n = n;
    row.p_low_comply = LowProbability(n, spec.noise_std, n);
    row.p_low_deviate = LowProbability(n, spec.noise_std, n - 1);
    row.xi = OneShotDeviationGain(game, noisy, grim, spec.delta).xi;
    row.supported = row.xi <= kEquilibriumTolerance;
    row.eta_analytic = std::numeric_limits<double>::infinity();
    if (spec.noise_std > 0.0) {
      const CurveMinimizer analytic =
          GaussianPrivacyCurve({2, HistogramSensitivity(n), std::nullopt},
                               spec.noise_std, spec.eps_grid)
              .minimizer;
      row.eta_analytic =
          AntiFolkBound(spec.delta, {analytic.eps, analytic.gamma});
    }
    const CurveMinimizer exact =
        ExactPrivacyCurve(noisy, spec.eps_grid).minimizer;
    row.eta_exact = AntiFolkBound(spec.delta, {exact.eps, exact.gamma});
    row.xi_perfect =
        OneShotDeviationGain(game, ThresholdSignals(n, 0.0), grim, spec.delta)
            .xi;
    return row;
  });

  for (const CollapseRow& row : out.rows) {
    if (!out.collapse_n && !row.supported) out.collapse_n = row.n;
    if (!out.eta_below_gap_n && row.eta_analytic < out.stage_gap) {
      out.eta_below_gap_n = row.n;
    }
    out.perfect_certified =
        out.perfect_certified && row.xi_perfect <= kEquilibriumTolerance;
  }
  if (!out.perfect_certified) {
    out.note =
        "discount factor too small: grim trigger fails even with perfect "
        "monitoring";
  } else if (!out.collapse_n) {
    out.note = "cooperation survives on the whole grid";
  }
  return out;
}

}  // namespace dprepeat
