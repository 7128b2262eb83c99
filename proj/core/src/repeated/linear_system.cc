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

#include "repeated/linear_system.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace dprepeat::internal {

ChainSolution SolveDiscountedChain(const DiscountedChain& chain, double delta) {
  const int m = chain.size;
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m);
  for (int w = 0; w < m; ++w) {
    for (int v = 0; v < m; ++v) system(w, v) -= delta * chain.transition[w][v];
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);

  ChainSolution out;
  for (const auto& reward : chain.reward) {
    Eigen::VectorXd rhs(m);
    for (int w = 0; w < m; ++w) rhs(w) = (1.0 - delta) * reward[w];
    Eigen::VectorXd v = lu.solve(rhs);
    // One step of iterative refinement keeps the residual at rounding level.
    v += lu.solve(rhs - system * v);
    out.residual =
        std::max(out.residual, (system * v - rhs).lpNorm<Eigen::Infinity>());
    out.values.emplace_back(v.data(), v.data() + m);
  }
  return out;
}

}  // namespace dprepeat::internal
