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

#include "dprepeat/families/discretize.h"

#include <algorithm>
#include <cmath>

#include "dprepeat/errors.h"
#include "dprepeat/format.h"

namespace dprepeat {

double GaussianCellMass(double lo, double hi, double center,
                        double noise_std) {
  const double scale = noise_std * std::sqrt(2.0);
  const double a = (lo - center) / scale;
  const double b = (hi - center) / scale;
  if (a >= 0.0) return 0.5 * (std::erfc(a) - std::erfc(b));
  if (b <= 0.0) return 0.5 * (std::erfc(-b) - std::erfc(-a));
  return 0.5 * (std::erf(b) - std::erf(a));
}

DiscretizedGaussian DiscretizeGaussian(
    const std::vector<std::vector<double>>& centers, double noise_std,
    double grid_width, double truncation) {
  Require(!centers.empty(), "need at least one center");
  Require(std::isfinite(noise_std) && noise_std > 0.0,
          "noise_std must be positive");
  Require(std::isfinite(grid_width) && grid_width > 0.0,
          "grid_width must be positive");
  Require(truncation >= kMinTruncation,
          "truncation must be at least 4 standard deviations");
  const std::size_t dim = centers[0].size();
  Require(dim >= 1, "centers need at least one coordinate");
  for (const auto& c : centers) {
    Require(c.size() == dim, "centers must share one dimension");
  }

  DiscretizedGaussian out;
  std::vector<double> origin(dim);
  std::int64_t total = 1;
  for (std::size_t d = 0; d < dim; ++d) {
    double lo = centers[0][d];
    double hi = centers[0][d];
    for (const auto& c : centers) {
      lo = std::min(lo, c[d]);
      hi = std::max(hi, c[d]);
    }
    lo -= truncation * noise_std;
    hi += truncation * noise_std;
    const double span = (hi - lo) / grid_width;
    if (!(span < static_cast<double>(kMaxDiscretizedCells) + 1.0)) {
      Fail(ErrorKind::kGuard, "Gaussian grid exceeds 10^4 cells");
    }
    const int cells = std::max(1, static_cast<int>(std::ceil(span - 1e-9)));
    origin[d] = lo;
    std::vector<double> axis(cells);
    for (int j = 0; j < cells; ++j) axis[j] = lo + (j + 0.5) * grid_width;
    out.axes.push_back(std::move(axis));
    total *= cells;
    if (total > kMaxDiscretizedCells) {
      Fail(ErrorKind::kGuard, "Gaussian grid exceeds 10^4 cells");
    }
  }
  Require(total >= 2, "degenerate grid: a single cell carries no signal");

  for (std::int64_t cell = 0; cell < total; ++cell) {
    std::int64_t rest = cell;
    std::vector<int> index(dim);
    for (int d = static_cast<int>(dim) - 1; d >= 0; --d) {
      const auto cells = static_cast<std::int64_t>(out.axes[d].size());
      index[d] = static_cast<int>(rest % cells);
      rest /= cells;
    }
    std::string label;
    for (std::size_t d = 0; d < dim; ++d) {
      if (d > 0) label += '|';
      label += FormatDouble(out.axes[d][index[d]]);
    }
    out.labels.push_back(std::move(label));
  }

  // Per-dimension masses, then products.
  for (const auto& c : centers) {
    std::vector<std::vector<double>> mass(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      for (std::size_t j = 0; j < out.axes[d].size(); ++j) {
        const double lo = origin[d] + j * grid_width;
        mass[d].push_back(
            GaussianCellMass(lo, lo + grid_width, c[d], noise_std));
      }
    }
    std::vector<double> row(total);
    long double sum = 0.0L;
    for (std::int64_t cell = 0; cell < total; ++cell) {
      std::int64_t rest = cell;
      double p = 1.0;
      for (int d = static_cast<int>(dim) - 1; d >= 0; --d) {
        const auto cells = static_cast<std::int64_t>(out.axes[d].size());
        p *= mass[d][rest % cells];
        rest /= cells;
      }
      row[cell] = p;
      sum += p;
    }
    long double normalized = 0.0L;
    for (double& p : row) {
      p = static_cast<double>(p / sum);
      normalized += p;
    }
    // Rounding leftovers go to the heaviest cell.
    double& peak = *std::max_element(row.begin(), row.end());
    peak = static_cast<double>(peak + (1.0L - normalized));
    out.table.push_back(std::move(row));
  }
  return out;
}

SignalStructure DiscretizeGaussianSignal(
    const OutcomeSpace& outcomes,
    const std::vector<std::vector<double>>& centers, double noise_std,
    double grid_width, double truncation) {
  Require(static_cast<std::int64_t>(centers.size()) == outcomes.size(),
          "need one center per outcome");
  DiscretizedGaussian grid =
      DiscretizeGaussian(centers, noise_std, grid_width, truncation);
  return SignalStructure(outcomes, SignalStructure::Kind::kPublic,
                         std::move(grid.labels), std::move(grid.table));
}

}  // namespace dprepeat
