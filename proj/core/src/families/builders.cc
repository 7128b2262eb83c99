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

#include "dprepeat/families/builders.h"

#include <algorithm>
#include <cmath>

#include "dprepeat/errors.h"
#include "dprepeat/families/discretize.h"
#include "dprepeat/game/outcome_space.h"

namespace dprepeat {
namespace {

constexpr char kSignalIrrelevant[] =
    "signal-irrelevant: realized payoffs are the stage payoffs";

std::string FamilyId(const std::string& family, int n) {
  return family + "/n=" + std::to_string(n);
}

// Outcome count of an anonymous game, or nullopt past the guard.
std::optional<std::int64_t> HistogramCount(int n, int k) {
  try {
    const std::int64_t count = CountCompositions(n, k);
    if (count <= kMaxOutcomes) return count;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kGuard) throw;
  }
  return std::nullopt;
}

// Attaches the discretized structure and its exact curve, or a note saying
// why they were skipped.
void AttachExact(FamilyInstance& inst, const OutcomeSpace& outcomes,
                 const std::vector<std::vector<double>>& centers,
                 const DiscretizationOptions& options) {
  try {
    SignalStructure signals = DiscretizeGaussianSignal(
        outcomes, centers, inst.noise_std, options.grid_width,
        options.truncation);
    if (outcomes.size() * signals.num_points() > kMaxExactCurveEntries) {
      inst.notes.push_back("exact curve skipped: table too large");
      inst.signals = std::move(signals);
      return;
    }
    inst.exact = ExactPrivacyCurve(signals, options.eps_grid,
                                   FamilyId(inst.family, inst.n) + "/exact");
    inst.signals = std::move(signals);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kGuard) throw;
    inst.notes.push_back(std::string("discretization skipped: ") + e.what());
  }
}

}  // namespace

StageGame PublicGoodsGame(int n) {
  Require(n >= 2, "public-goods game needs n >= 2");
  return StageGame::Anonymous(
      n, 2, [n](int own, std::span<const int> others) {
        const double share = 2.0 / 3.0 * others[0] / (n - 1);
        return own == 0 ? share : share + 1.0 / 3.0;
      });
}

void AnonymousSpec::Validate() const {
  Require(n >= 2, "anonymous family needs n >= 2");
  Require(k >= 2, "anonymous family needs k >= 2");
  Require(std::isfinite(noise_std) && noise_std > 0.0,
          "noise_std must be positive");
  Require(static_cast<bool>(rule) || k == 2,
          "a payoff rule is required unless k = 2");
}

FamilyInstance BuildAnonymousInstance(const AnonymousSpec& spec) {
  spec.Validate();
  FamilyInstance inst;
  inst.family = "anonymous";
  inst.n = spec.n;
  inst.noise_std = spec.noise_std;
  inst.sensitivity = HistogramSensitivity(spec.n, spec.count_space);
  inst.payoff_consistency = kSignalIrrelevant;
  inst.analytic = GaussianPrivacyCurve(
      {spec.k, inst.sensitivity, std::nullopt}, spec.noise_std,
      spec.discretization.eps_grid, FamilyId(inst.family, spec.n));

  if (!HistogramCount(spec.n, spec.k)) {
    inst.notes.push_back("stage game skipped: outcome guard");
    return inst;
  }
  inst.game = spec.rule ? StageGame::Anonymous(spec.n, spec.k, spec.rule)
                        : PublicGoodsGame(spec.n);
  if (!spec.discretization.exact) return inst;

  const OutcomeSpace& outcomes = inst.game->outcomes();
  const double scale = spec.count_space ? 1.0 : 1.0 / spec.n;
  std::vector<std::vector<double>> centers;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    std::vector<double> c;
    for (int count : outcomes.Coordinates(o)) c.push_back(count * scale);
    centers.push_back(std::move(c));
  }
  AttachExact(inst, outcomes, centers, spec.discretization);
  return inst;
}

StageGame CournotGame(const CournotSpec& spec) {
  spec.Validate();
  const std::vector<double> q = spec.Quantities();
  const int n = spec.n;
  auto demand = spec.demand;
  return StageGame::Anonymous(
      n, spec.grid_points, [q, n, demand](int own, std::span<const int> others) {
        double total = q[own];
        for (std::size_t j = 0; j < others.size(); ++j) total += others[j] * q[j];
        return q[own] * demand(total / n) - q[own];
      });
}

FamilyInstance BuildCournotInstance(const CournotSpec& spec,
                                    const DiscretizationOptions& options) {
  spec.Validate();
  FamilyInstance inst;
  inst.family = "cournot";
  inst.n = spec.n;
  inst.noise_std = spec.log_shock_std;
  const CournotSensitivityResult sens = CournotSensitivity(spec);
  inst.sensitivity = sens.first_order;
  inst.exact_sensitivity = sens.exact;
  inst.payoff_consistency =
      "price-based: E[theta] = 1 makes expected profit q P(x) - q";
  inst.analytic =
      GaussianPrivacyCurve({1, sens.first_order, std::nullopt},
                           spec.log_shock_std, options.eps_grid,
                           FamilyId(inst.family, spec.n));

  if (!HistogramCount(spec.n, spec.grid_points)) {
    inst.notes.push_back("stage game skipped: outcome guard");
    return inst;
  }
  inst.game = CournotGame(spec);
  if (!options.exact) return inst;

  const OutcomeSpace& outcomes = inst.game->outcomes();
  const std::vector<double> q = spec.Quantities();
  std::vector<std::vector<double>> centers;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    const std::vector<int> counts = outcomes.Coordinates(o);
    double total = 0.0;
    for (std::size_t j = 0; j < counts.size(); ++j) total += counts[j] * q[j];
    centers.push_back({std::log(spec.demand(total / spec.n))});
  }
  AttachExact(inst, outcomes, centers, options);
  return inst;
}

FamilyInstance BuildCounterfactualInstance(const CounterfactualSpec& spec) {
  const StageGame& game = spec.base;
  Require(game.num_players() >= 2, "counterfactual family needs n >= 2");
  Require(std::isfinite(spec.noise_std) && spec.noise_std > 0.0,
          "noise_std must be positive");
  const int n = game.num_players();
  const auto& counts = game.action_counts();
  const int k = *std::max_element(counts.begin(), counts.end());

  FamilyInstance inst;
  inst.family = "counterfactual";
  inst.n = n;
  inst.noise_std = spec.noise_std;
  const double mu = MuSensitivity(game);
  inst.sensitivity = CounterfactualSensitivity(n, k, mu);
  inst.payoff_consistency = kSignalIrrelevant;
  inst.analytic = GaussianPrivacyCurve({k * n, inst.sensitivity, std::nullopt},
                                       spec.noise_std,
                                       spec.discretization.eps_grid,
                                       FamilyId(inst.family, n));
  inst.game = game;
  if (!spec.discretization.exact) return inst;
  if (std::any_of(counts.begin(), counts.end(),
                  [k](int c) { return c != k; })) {
    inst.notes.push_back("exact structure skipped: unequal action counts");
    return inst;
  }

  // One shared grid for every player's k-vector of counterfactual payoffs.
  const OutcomeSpace& outcomes = game.outcomes();
  const std::int64_t m = outcomes.size();
  if (outcomes.anonymous()) {
    inst.notes.push_back("exact structure skipped: anonymous representation");
    return inst;
  }
  std::vector<std::vector<double>> centers;
  for (int i = 0; i < n; ++i) {
    for (std::int64_t o = 0; o < m; ++o) {
      std::vector<int> base = outcomes.Coordinates(o);
      std::vector<double> c;
      for (int a = 0; a < k; ++a) {
        base[i] = a;
        c.push_back(game.Payoff(i, base));
      }
      centers.push_back(std::move(c));
    }
  }
  try {
    const DiscretizedGaussian grid =
        DiscretizeGaussian(centers, spec.noise_std,
                           spec.discretization.grid_width,
                           spec.discretization.truncation);
    const std::int64_t alphabet = grid.num_cells();
    std::int64_t points = 1;
    for (int i = 0; i < n; ++i) {
      if (points > kMaxExactCurveEntries / alphabet) {
        Fail(ErrorKind::kGuard, "joint private signal space too large");
      }
      points *= alphabet;
    }
    if (points * m > kMaxExactCurveEntries) {
      Fail(ErrorKind::kGuard, "private signal table too large");
    }
    std::vector<std::vector<double>> table(m, std::vector<double>(points));
    for (std::int64_t o = 0; o < m; ++o) {
      for (std::int64_t pt = 0; pt < points; ++pt) {
        std::int64_t rest = pt;
        double p = 1.0;
        for (int i = n - 1; i >= 0; --i) {
          p *= grid.table[i * m + o][rest % alphabet];
          rest /= alphabet;
        }
        table[o][pt] = p;
      }
    }
    SignalStructure signals(outcomes, SignalStructure::Kind::kPrivate,
                            grid.labels, std::move(table));
    inst.exact = ExactPrivacyCurve(signals, spec.discretization.eps_grid,
                                   FamilyId(inst.family, n) + "/exact");
    inst.signals = std::move(signals);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kGuard) throw;
    inst.notes.push_back(std::string("discretization skipped: ") + e.what());
  }
  return inst;
}

}  // namespace dprepeat
