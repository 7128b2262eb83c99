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

#include "dprepeat/privacy/finite_dp.h"

#include <cmath>
#include <limits>

#include "dprepeat/errors.h"

namespace dprepeat {

DpGammaResult<double> FiniteDpGamma(const SignalStructure& signals,
                                    double eps) {
  Require(eps >= 0.0, "eps must be nonnegative");
  if (std::isinf(eps)) return {};
  return internal::PositivePartGamma<double>(signals, std::exp(eps));
}

DpGammaResult<Rational> FiniteDpGammaExact(const SignalStructure& signals,
                                           const Rational& ratio) {
  Require(ratio >= 1, "likelihood-ratio bound must be at least 1");
  return internal::PositivePartGamma<Rational>(signals, ratio);
}

double MaxLogLikelihoodRatio(const SignalStructure& signals) {
  double worst = 0.0;
  signals.outcomes().ForEachNeighborPair(
      [&](std::int64_t from, std::int64_t to, int, int, int) {
        const auto p = signals.Distribution(from);
        const auto q = signals.Distribution(to);
        for (std::size_t s = 0; s < p.size(); ++s) {
          if (p[s] == 0.0 && q[s] == 0.0) continue;
          if (p[s] == 0.0 || q[s] == 0.0) {
            worst = std::numeric_limits<double>::infinity();
            continue;
          }
          worst = std::max(worst, std::abs(std::log(p[s] / q[s])));
        }
      });
  return worst;
}

}  // namespace dprepeat
