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

#include "dprepeat/game/signal_structure.h"

#include <cmath>

#include "dprepeat/errors.h"
#include "dprepeat/game/stage_game.h"

namespace dprepeat {
namespace {

constexpr std::int64_t kMaxTableEntries = 50'000'000;

}  // namespace

SignalStructure::SignalStructure(OutcomeSpace outcomes, Kind kind,
                                 std::vector<std::string> labels,
                                 std::vector<std::vector<double>> dist,
                                 std::optional<ExPostPayoffs> expost)
    : outcomes_(std::move(outcomes)),
      kind_(kind),
      labels_(std::move(labels)),
      dist_(std::move(dist)),
      expost_(std::move(expost)) {
  Require(!labels_.empty(), "signal set is empty");
  const int n = outcomes_.num_players();
  num_points_ = 1;
  if (kind_ == Kind::kPrivate) {
    for (int i = 0; i < n; ++i) {
      num_points_ *= num_signals();
      if (num_points_ > kMaxOutcomes) {
        Fail(ErrorKind::kGuard, "private signal space S^n is too large");
      }
    }
  } else {
    num_points_ = num_signals();
  }
  if (num_points_ * outcomes_.size() > kMaxTableEntries) {
    Fail(ErrorKind::kGuard, "signal table is too large");
  }
  Require(static_cast<std::int64_t>(dist_.size()) == outcomes_.size(),
          "signal table needs one distribution per outcome");
  for (std::int64_t o = 0; o < outcomes_.size(); ++o) {
    Require(static_cast<std::int64_t>(dist_[o].size()) == num_points_,
            "signal distribution for outcome " + outcomes_.Key(o) +
                " has the wrong dimension");
    CheckDistribution(dist_[o], "signal distribution");
  }
  if (expost_) {
    const int tables = static_cast<int>(expost_->size());
    Require(tables == n || (outcomes_.anonymous() && tables == 1),
            "ex-post payoffs need one table per player");
    for (int i = 0; i < tables; ++i) {
      const auto& per_action = (*expost_)[i];
      Require(static_cast<int>(per_action.size()) == outcomes_.num_actions(i),
              "ex-post payoffs need one row per action");
      for (const auto& row : per_action) {
        Require(static_cast<int>(row.size()) == num_signals(),
                "ex-post payoff row must cover the signal set");
      }
    }
  }
}

int SignalStructure::Observation(std::int64_t point, int player) const {
  if (kind_ == Kind::kPublic) return static_cast<int>(point);
  const int n = outcomes_.num_players();
  for (int j = n - 1; j > player; --j) point /= num_signals();
  return static_cast<int>(point % num_signals());
}

std::vector<int> SignalStructure::Observations(std::int64_t point) const {
  const int n = outcomes_.num_players();
  std::vector<int> obs(n);
  if (kind_ == Kind::kPublic) {
    std::fill(obs.begin(), obs.end(), static_cast<int>(point));
    return obs;
  }
  for (int j = n - 1; j >= 0; --j) {
    obs[j] = static_cast<int>(point % num_signals());
    point /= num_signals();
  }
  return obs;
}

std::int64_t SignalStructure::PointFromSignals(
    std::span<const int> signals) const {
  if (kind_ == Kind::kPublic) {
    Require(signals.size() == 1, "public point takes one signal");
    return signals[0];
  }
  Require(static_cast<int>(signals.size()) == outcomes_.num_players(),
          "private point needs one signal per player");
  std::int64_t point = 0;
  for (int s : signals) {
    Require(s >= 0 && s < num_signals(), "signal index out of range");
    point = point * num_signals() + s;
  }
  return point;
}

SignalStructure SignalStructure::EmbedAsPrivate() const {
  Require(is_public(), "structure is already private");
  const int n = outcomes_.num_players();
  std::int64_t points = 1;
  for (int i = 0; i < n; ++i) points *= num_signals();
  std::vector<std::vector<double>> dist(outcomes_.size(),
                                        std::vector<double>(points, 0.0));
  for (std::int64_t o = 0; o < outcomes_.size(); ++o) {
    for (int s = 0; s < num_signals(); ++s) {
      std::int64_t point = 0;
      for (int i = 0; i < n; ++i) point = point * num_signals() + s;
      dist[o][point] = dist_[o][s];
    }
  }
  return SignalStructure(outcomes_, Kind::kPrivate, labels_, std::move(dist),
                         expost_);
}

void CorrelatedDevice::Validate(const OutcomeSpace& outcomes) const {
  const int n = outcomes.num_players();
  Require(static_cast<int>(signal_counts.size()) == n,
          "device needs a signal set per player");
  Require(static_cast<int>(recommendation.size()) == n,
          "device needs a recommendation map per player");
  double total = 0.0;
  for (const Entry& e : joint) {
    Require(static_cast<int>(e.signals.size()) == n,
            "device entry must name one signal per player");
    for (int i = 0; i < n; ++i) {
      Require(e.signals[i] >= 0 && e.signals[i] < signal_counts[i],
              "device signal out of range");
    }
    Require(std::isfinite(e.prob) && e.prob >= 0.0,
            "device probability must be nonnegative");
    total += e.prob;
  }
  Require(std::abs(total - 1.0) <= kNormalizationTolerance,
          "device distribution does not sum to 1");
  for (int i = 0; i < n; ++i) {
    Require(static_cast<int>(recommendation[i].size()) == signal_counts[i],
            "recommendation map must cover every signal");
    for (const auto& mixed : recommendation[i]) {
      Require(static_cast<int>(mixed.size()) == outcomes.num_actions(i),
              "recommended strategy has the wrong length");
      CheckDistribution(mixed, "recommended strategy");
    }
  }
}

}  // namespace dprepeat
