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

#ifndef DPREPEAT_FAMILIES_SCAN_H_
#define DPREPEAT_FAMILIES_SCAN_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dprepeat/families/builders.h"

namespace dprepeat {

struct ScanRow {
  int n = 0;
  double sensitivity = 0.0;
  double eps_star = 0.0;
  double gamma_star = 0.0;
  double eps_plus_gamma = 0.0;
  double eta = 0.0;              // at the scan's delta
  double normalized_rate = 0.0;  // eps_plus_gamma * n / sqrt(log n)
  bool monotone = true;          // no increase over the previous row
};

struct ScanResult {
  double delta = 0.0;
  std::vector<ScanRow> rows;
  bool monotone = true;
  // max / min of normalized_rate over rows where it is positive; NaN if none.
  double rate_band = 0.0;
};

using FamilyBuilder = std::function<FamilyInstance(int n)>;

// Builds each member in parallel and reads its analytic curve. `ns` must be
// strictly increasing.
ScanResult ScanN(const FamilyBuilder& build, std::span<const int> ns,
                 double delta);

// Columns: n, sensitivity, eps_star, gamma_star, eps_plus_gamma,
// eta_at_delta, normalized_rate, monotone.
std::string ScanCsv(const ScanResult& result);

}  // namespace dprepeat

#endif  // DPREPEAT_FAMILIES_SCAN_H_
