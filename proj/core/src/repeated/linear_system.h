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

// Dense discounted-chain solver shared by the value computations.

#ifndef DPREPEAT_SRC_REPEATED_LINEAR_SYSTEM_H_
#define DPREPEAT_SRC_REPEATED_LINEAR_SYSTEM_H_

#include <vector>

namespace dprepeat::internal {

// A finite chain with per-state transition rows and per-player rewards.
struct DiscountedChain {
  int size = 0;
  std::vector<std::vector<double>> transition;  // [state][next]
  std::vector<std::vector<double>> reward;      // [player][state]
};

struct ChainSolution {
  std::vector<std::vector<double>> values;  // [player][state]
  double residual = 0.0;
};

// Solves V = (1 - delta) r + delta T V for every player by one LU solve.
ChainSolution SolveDiscountedChain(const DiscountedChain& chain, double delta);

}  // namespace dprepeat::internal

#endif  // DPREPEAT_SRC_REPEATED_LINEAR_SYSTEM_H_
