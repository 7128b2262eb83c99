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

#include "dprepeat/families/scan.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dprepeat/errors.h"
#include "dprepeat/format.h"
#include "dprepeat/parallel.h"
#include "dprepeat/repeated/deviation.h"

namespace dprepeat {

ScanResult ScanN(const FamilyBuilder& build, std::span<const int> ns,
                 double delta) {
  CheckDiscount(delta);
  Require(!ns.empty(), "scan needs at least one n");
  for (std::size_t j = 1; j < ns.size(); ++j) {
    Require(ns[j] > ns[j - 1], "scan values of n must increase");
  }
  ScanResult out;
  out.delta = delta;
  out.rows = ParallelMap(ns.size(), [&](std::size_t j) {
    const FamilyInstance inst = build(ns[j]);
    const CurveMinimizer& m = inst.analytic.minimizer;
    ScanRow row;
    row.n = ns[j];
    row.sensitivity = inst.sensitivity;
    row.eps_star = m.eps;
    row.gamma_star = m.gamma;
    row.eps_plus_gamma = m.sum();
    row.eta = AntiFolkBound(delta, {m.eps, m.gamma});
    row.normalized_rate =
        row.eps_plus_gamma * row.n / std::sqrt(std::log(row.n));
    return row;
  });

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t j = 0; j < out.rows.size(); ++j) {
    ScanRow& row = out.rows[j];
    if (j > 0) {
      const ScanRow& prev = out.rows[j - 1];
      row.monotone = row.eps_plus_gamma <= prev.eps_plus_gamma + 1e-12 &&
                     row.eta <= prev.eta + 1e-12;
    }
    out.monotone = out.monotone && row.monotone;
    if (row.normalized_rate > 0.0) {
      lo = std::min(lo, row.normalized_rate);
      hi = std::max(hi, row.normalized_rate);
    }
  }
  out.rate_band =
      hi > 0.0 ? hi / lo : std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::string ScanCsv(const ScanResult& result) {
  std::string out =
      "n,sensitivity,eps_star,gamma_star,eps_plus_gamma,eta_at_delta,"
      "normalized_rate,monotone\n";
  for (const ScanRow& r : result.rows) {
    out += std::to_string(r.n) + ',' + FormatDouble(r.sensitivity) + ',' +
           FormatDouble(r.eps_star) + ',' + FormatDouble(r.gamma_star) + ',' +
           FormatDouble(r.eps_plus_gamma) + ',' + FormatDouble(r.eta) + ',' +
           FormatDouble(r.normalized_rate) + ',' +
           (r.monotone ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace dprepeat
