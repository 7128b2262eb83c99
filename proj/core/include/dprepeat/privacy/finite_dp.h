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

#ifndef DPREPEAT_PRIVACY_FINITE_DP_H_
#define DPREPEAT_PRIVACY_FINITE_DP_H_

#include <algorithm>
#include <cstdint>

#include "dprepeat/game/signal_structure.h"
#include "dprepeat/rational.h"

namespace dprepeat {

// Neighbor pair attaining gamma*: outcome `from` versus `to`, which differ by
// one player switching from_action -> to_action. player is -1 for
// anonymous structures.
struct DpWitness {
  int player = -1;
  std::int64_t from = -1;
  std::int64_t to = -1;
  int from_action = -1;
  int to_action = -1;
};

template <class Scalar>
struct DpGammaResult {
  Scalar gamma{};
  DpWitness witness;
};

// Smallest gamma for which the structure is (eps, gamma)-differentially
// private. For an ordered neighbor pair the worst event is the set of points
// where P_from exceeds e^eps P_to, so
//   gamma* = max over ordered pairs of sum_s max(0, P_from(s) - e^eps P_to(s)).
// Both orders are visited, covering both sides of the two-sided definition.
DpGammaResult<double> FiniteDpGamma(const SignalStructure& signals,
                                    double eps);

// Exact variant: `ratio` plays the role of e^eps (any rational >= 1), and
// all probabilities are lifted exactly from their double values.
DpGammaResult<Rational> FiniteDpGammaExact(const SignalStructure& signals,
                                           const Rational& ratio);

// max |log(P_a(s) / P_a'(s))| over neighbor pairs and points; +inf when a
// point has positive mass under one neighbor and zero under the other.
double MaxLogLikelihoodRatio(const SignalStructure& signals);

namespace internal {

template <class Scalar>
DpGammaResult<Scalar> PositivePartGamma(const SignalStructure& signals,
                                        const Scalar& ratio) {
  const auto& table = signals.table();
  std::vector<std::vector<Scalar>> lifted;
  if constexpr (!std::is_same_v<Scalar, double>) {
    lifted.reserve(table.size());
    for (const auto& row : table) {
      std::vector<Scalar> r;
      r.reserve(row.size());
      for (double p : row) r.push_back(Lift<Scalar>(p));
      lifted.push_back(std::move(r));
    }
  }
  auto row_of = [&](std::int64_t o) -> const auto& {
    if constexpr (std::is_same_v<Scalar, double>) {
      return table[o];
    } else {
      return lifted[o];
    }
  };
  DpGammaResult<Scalar> best;
  best.gamma = Scalar(0);
  bool have = false;
  signals.outcomes().ForEachNeighborPair(
      [&](std::int64_t from, std::int64_t to, int player, int from_action,
          int to_action) {
        const auto& p = row_of(from);
        const auto& q = row_of(to);
        Scalar excess(0);
        for (std::size_t s = 0; s < p.size(); ++s) {
          Scalar d = p[s] - ratio * q[s];
          if (d > Scalar(0)) excess += d;
        }
        if (!have || excess > best.gamma) {
          have = true;
          best.gamma = excess;
          best.witness = {player, from, to, from_action, to_action};
        }
      });
  if (best.gamma > Scalar(1)) best.gamma = Scalar(1);
  return best;
}

}  // namespace internal
}  // namespace dprepeat

#endif  // DPREPEAT_PRIVACY_FINITE_DP_H_
