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

#ifndef DPREPEAT_FAMILIES_DISCRETIZE_H_
#define DPREPEAT_FAMILIES_DISCRETIZE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dprepeat/game/outcome_space.h"
#include "dprepeat/game/signal_structure.h"

namespace dprepeat {

inline constexpr std::int64_t kMaxDiscretizedCells = 10'000;
inline constexpr double kMinTruncation = 4.0;

// Gaussian noise around each center, integrated over a regular grid of cells
// of side `grid_width` covering the centers' bounding box padded by
// `truncation` standard deviations, then renormalized. Every center must
// have the same dimension; cells are ordered with the first coordinate most
// significant.
struct DiscretizedGaussian {
  std::vector<std::vector<double>> axes;   // cell midpoints per dimension
  std::vector<std::vector<double>> table;  // [center][cell]
  std::vector<std::string> labels;         // one per cell

  std::int64_t num_cells() const {
    return table.empty() ? 0 : static_cast<std::int64_t>(table[0].size());
  }
};

DiscretizedGaussian DiscretizeGaussian(
    const std::vector<std::vector<double>>& centers, double noise_std,
    double grid_width, double truncation);

// Public signal structure whose row for outcome o is the discretized
// Gaussian around centers[o].
SignalStructure DiscretizeGaussianSignal(
    const OutcomeSpace& outcomes,
    const std::vector<std::vector<double>>& centers, double noise_std,
    double grid_width, double truncation);

// Probability mass of N(center, noise_std^2) on [lo, hi], accurate in the
// tails.
double GaussianCellMass(double lo, double hi, double center, double noise_std);

}  // namespace dprepeat

#endif  // DPREPEAT_FAMILIES_DISCRETIZE_H_
