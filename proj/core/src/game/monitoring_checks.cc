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

#include "dprepeat/game/monitoring_checks.h"

#include <cmath>
#include <vector>

#include "dprepeat/errors.h"

namespace dprepeat {
namespace {

// Marginal of `player`'s observation under outcome `o`.
std::vector<double> ObservationMarginal(const SignalStructure& signals,
                                        std::int64_t o, int player) {
  std::vector<double> marginal(signals.num_signals(), 0.0);
  const auto row = signals.Distribution(o);
  for (std::int64_t point = 0; point < signals.num_points(); ++point) {
    marginal[signals.Observation(point, player)] += row[point];
  }
  return marginal;
}

}  // namespace

PayoffConsistency CheckPayoffConsistency(const StageGame& game,
                                         const SignalStructure& signals) {
  if (!signals.expost()) {
    Fail(ErrorKind::kInvalidArgument,
         "payoff consistency needs ex-post payoffs U_i(a_i, s)");
  }
  Require(game.outcomes() == signals.outcomes(),
          "signal structure belongs to a different game");
  const ExPostPayoffs& expost = *signals.expost();
  const AffineMap& scale = game.normalization();
  const OutcomeSpace& space = game.outcomes();
  PayoffConsistency result;
  // Anonymous players are interchangeable: one representative per outcome,
  // checked at every action present in the histogram.
  const int players = space.anonymous() ? 1 : space.num_players();
  for (std::int64_t o = 0; o < space.size(); ++o) {
    const std::vector<int> coords = space.Coordinates(o);
    for (int i = 0; i < players; ++i) {
      const auto& table = expost[expost.size() == 1 ? 0 : i];
      const std::vector<double> marginal = ObservationMarginal(signals, o, i);
      for (int action = 0; action < space.num_actions(i); ++action) {
        const bool played =
            space.anonymous() ? coords[action] > 0 : coords[i] == action;
        if (!played) continue;
        double predicted = 0.0;
        for (int s = 0; s < signals.num_signals(); ++s) {
          predicted += scale.Apply(table[action][s]) * marginal[s];
        }
        const double gap = std::abs(game.PayoffAt(i, action, o) - predicted);
        if (gap > result.max_discrepancy) {
          result.max_discrepancy = gap;
          result.player = i;
          result.outcome = o;
        }
      }
    }
  }
  return result;
}

FullSupport CheckFullSupport(const SignalStructure& signals) {
  const OutcomeSpace& space = signals.outcomes();
  for (std::int64_t o = 0; o < space.size(); ++o) {
    if (signals.is_public()) {
      const auto row = signals.Distribution(o);
      for (int s = 0; s < signals.num_signals(); ++s) {
        if (!(row[s] > 0.0)) return {false, o, -1, s};
      }
      continue;
    }
    for (int i = 0; i < space.num_players(); ++i) {
      const std::vector<double> marginal = ObservationMarginal(signals, o, i);
      for (int s = 0; s < signals.num_signals(); ++s) {
        if (!(marginal[s] > 0.0)) return {false, o, i, s};
      }
    }
  }
  return {};
}

}  // namespace dprepeat
