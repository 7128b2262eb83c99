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

#include "dprepeat/privacy/privacy_curve.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "dprepeat/errors.h"
#include "dprepeat/format.h"
#include "dprepeat/privacy/finite_dp.h"

namespace dprepeat {

std::vector<double> EpsGrid::Points() const {
  Require(lo > 0.0 && hi > lo && count >= 2, "invalid eps grid");
  std::vector<double> points(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int j = 0; j < count; ++j) points[j] = lo * std::exp(step * j);
  points.back() = hi;
  return points;
}

EpsGrid EpsGrid::Parse(const std::string& text) {
  std::stringstream stream(text);
  std::string lo, hi, count;
  if (!std::getline(stream, lo, ':') || !std::getline(stream, hi, ':') ||
      !std::getline(stream, count)) {
    Fail(ErrorKind::kParse, "eps grid must look like lo:hi:count");
  }
  EpsGrid grid;
  try {
    grid.lo = std::stod(lo);
    grid.hi = std::stod(hi);
    grid.count = std::stoi(count);
  } catch (const std::exception&) {
    Fail(ErrorKind::kParse, "eps grid must look like lo:hi:count");
  }
  if (!(grid.lo > 0.0 && grid.hi > grid.lo && grid.count >= 2)) {
    Fail(ErrorKind::kParse, "eps grid needs 0 < lo < hi and count >= 2");
  }
  return grid;
}

const char* ProvenanceName(CurveProvenance provenance) {
  switch (provenance) {
    case CurveProvenance::kExactFinite:
      return "exact-finite";
    case CurveProvenance::kAnalyticGaussian:
      return "analytic-gaussian";
  }
  return "unknown";
}

CurveMinimizer MinimizeEpsPlusGamma(
    const std::function<double(double)>& gamma_of_eps,
    const std::vector<double>& grid) {
  Require(!grid.empty(), "empty eps grid");
  CurveMinimizer best{0.0, gamma_of_eps(0.0)};
  std::size_t arg = 0;
  double grid_best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double g = gamma_of_eps(grid[j]);
    if (grid[j] + g < grid_best) {
      grid_best = grid[j] + g;
      arg = j;
    }
    if (grid[j] + g < best.sum()) best = {grid[j], g};
  }
  double a = arg == 0 ? 0.0 : grid[arg - 1];
  double b = arg + 1 == grid.size() ? grid[arg] : grid[arg + 1];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = c + gamma_of_eps(c);
  double fd = d + gamma_of_eps(d);
  while (b - a > kMinimizerTolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = c + gamma_of_eps(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = d + gamma_of_eps(d);
    }
  }
  for (double e : {a, b, c, d}) {
    const double g = gamma_of_eps(e);
    if (e + g < best.sum()) best = {e, g};
  }
  return best;
}

PrivacyCurve ExactPrivacyCurve(const SignalStructure& signals,
                               const EpsGrid& grid, std::string id) {
  PrivacyCurve curve;
  curve.id = std::move(id);
  curve.provenance = CurveProvenance::kExactFinite;
  curve.eps = grid.Points();
  auto gamma_of = [&](double eps) { return FiniteDpGamma(signals, eps).gamma; };
  curve.gamma.reserve(curve.eps.size());
  for (double e : curve.eps) curve.gamma.push_back(gamma_of(e));
  curve.minimizer = MinimizeEpsPlusGamma(gamma_of, curve.eps);
  return curve;
}

PrivacyCurve GaussianPrivacyCurve(const SensitivitySpec& sens,
                                  double noise_std, const EpsGrid& grid,
                                  std::string id) {
  Require(noise_std > 0.0, "noise_std must be positive");
  Require(sens.l2 >= 0.0, "sensitivity must be nonnegative");
  PrivacyCurve curve;
  curve.id = std::move(id);
  curve.provenance = CurveProvenance::kAnalyticGaussian;
  curve.eps = grid.Points();
  auto gamma_of = [&](double eps) {
    return GaussianGamma(sens.l2, noise_std, eps);
  };
  for (double e : curve.eps) curve.gamma.push_back(gamma_of(e));
  curve.minimizer = MinimizeEpsPlusGamma(gamma_of, curve.eps);
  return curve;
}

std::string CurveCsv(const PrivacyCurve& curve) {
  std::string out = "eps,gamma,provenance\n";
  const char* provenance = ProvenanceName(curve.provenance);
  for (std::size_t j = 0; j < curve.eps.size(); ++j) {
    out += FormatDouble(curve.eps[j]);
    out += ',';
    out += FormatDouble(curve.gamma[j]);
    out += ',';
    out += provenance;
    out += '\n';
  }
  return out;
}

}  // namespace dprepeat
