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

#include "dprepeat/families/sensitivity.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dprepeat/errors.h"

namespace dprepeat {

double HistogramSensitivity(int n, bool count_space) {
  Require(n >= 2, "histogram sensitivity needs n >= 2");
  return count_space ? std::sqrt(2.0) : std::sqrt(2.0) / n;
}

namespace {

// Anonymous payoffs depend on the others' histogram, so one player's switch
// is a unit move between histograms of the other n - 1 players.
double AnonymousMuSensitivity(const StageGame& game) {
  const int k = game.num_actions(0);
  const OutcomeSpace others =
      OutcomeSpace::Histograms(game.num_players() - 1, k);
  double mu = 0.0;
  for (std::int64_t h = 0; h < others.size(); ++h) {
    const std::vector<int> counts = others.Coordinates(h);
    for (int from = 0; from < k; ++from) {
      if (counts[from] == 0) continue;
      for (int to = from + 1; to < k; ++to) {
        std::vector<int> moved = counts;
        --moved[from];
        ++moved[to];
        for (int own = 0; own < k; ++own) {
          mu = std::max(mu, std::abs(game.AnonymousPayoff(own, counts) -
                                     game.AnonymousPayoff(own, moved)));
        }
      }
    }
  }
  return mu;
}

}  // namespace

double MuSensitivity(const StageGame& game) {
  if (game.anonymous()) return AnonymousMuSensitivity(game);
  const auto& counts = game.action_counts();
  const int n = game.num_players();
  std::int64_t profiles = 1;
  for (int c : counts) {
    if (profiles > kMaxSensitivityProfiles / c) {
      Fail(ErrorKind::kGuard, "mu sensitivity enumeration exceeds 10^6 "
                              "profiles");
    }
    profiles *= c;
  }
  double mu = 0.0;
  std::vector<int> profile(n, 0);
  for (std::int64_t index = 0; index < profiles; ++index) {
    std::int64_t rest = index;
    for (int j = n - 1; j >= 0; --j) {
      profile[j] = static_cast<int>(rest % counts[j]);
      rest /= counts[j];
    }
    for (int j = 0; j < n; ++j) {
      const int original = profile[j];
      for (int b = original + 1; b < counts[j]; ++b) {
        std::vector<int> changed = profile;
        changed[j] = b;
        for (int i = 0; i < n; ++i) {
          if (i == j) continue;
          mu = std::max(mu, std::abs(game.Payoff(i, profile) -
                                     game.Payoff(i, changed)));
        }
      }
    }
  }
  return mu;
}

double CounterfactualSensitivity(int n, int k, double mu) {
  Require(n >= 2 && k >= 1, "counterfactual sensitivity needs n >= 2, k >= 1");
  Require(mu >= 0.0, "mu must be nonnegative");
  return mu * std::sqrt(static_cast<double>(k) * (n - 1));
}

std::vector<double> CournotSpec::Quantities() const {
  std::vector<double> q(grid_points);
  for (int j = 0; j < grid_points; ++j) {
    q[j] = static_cast<double>(j) / (grid_points - 1);
  }
  return q;
}

void CournotSpec::Validate() const {
  Require(n >= 2, "Cournot family needs n >= 2");
  Require(grid_points >= 2, "quantity grid needs at least two points");
  Require(log_shock_std > 0.0, "log-shock std must be positive");
  Require(static_cast<bool>(demand), "demand function missing");
  for (int j = 0; j < 4 * (grid_points - 1) + 1; ++j) {
    const double x = static_cast<double>(j) / (4 * (grid_points - 1));
    if (!(demand(x) > 0.0)) {
      Fail(ErrorKind::kInvalidArgument, "demand must be positive on [0, 1]");
    }
  }
}

CournotSensitivityResult CournotSensitivity(const CournotSpec& spec) {
  spec.Validate();
  const auto& P = spec.demand;
  // Log-derivative on the aggregate grid x = m / (n (grid_points - 1)).
  const int fine = spec.n * (spec.grid_points - 1);
  const double h = 1.0 / fine;
  auto log_p = [&](double x) { return std::log(P(x)); };
  double sup = 0.0;
  double exact = 0.0;
  for (int m = 0; m <= fine; ++m) {
    const double x = m * h;
    const double lo = std::max(0.0, x - h);
    const double hi = std::min(1.0, x + h);
    sup = std::max(sup, std::abs((log_p(hi) - log_p(lo)) / (hi - lo)));
  }
  // A firm moving from 0 to 1 shifts the aggregate by 1/n; log P is monotone,
  // so that move is the largest at each value of the others' total.
  const int others_max = (spec.n - 1) * (spec.grid_points - 1);
  for (int m = 0; m <= others_max; ++m) {
    const double base = m * h;
    exact = std::max(exact,
                     std::abs(log_p(base + 1.0 / spec.n) - log_p(base)));
  }
  CournotSensitivityResult out;
  out.first_order = sup / spec.n;
  out.exact = exact;
  out.closed_form = spec.log_derivative_sup
                        ? *spec.log_derivative_sup / spec.n
                        : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace dprepeat
