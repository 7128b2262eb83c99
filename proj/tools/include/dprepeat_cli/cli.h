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


#ifndef DPREPEAT_CLI_CLI_H_
#define DPREPEAT_CLI_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dprepeat/privacy/privacy_curve.h"

namespace dprepeat::cli {

// Process exit codes.
enum ExitCode : int {
  kExitPass = 0,
  kExitViolation = 1,
  kExitParse = 2,
  kExitGuard = 3,
  kExitIncompatible = 4,
};

struct RunConfig {
  std::string command;
  std::string game_path;
  std::string signals_path;
  std::string strategy_path;
  double delta = 0.9;
  int theorem = 1;
  int horizon = 4;
  std::uint64_t seed = 0;
  std::string format = "json";  // json | csv | text
  std::string out_path;
  bool exact_rational = false;
  EpsGrid eps_grid;
  std::string slack = "measured";

  // Family selection for analyze-signals, scan-n and demo-collapse.
  std::string family;
  std::vector<int> n_list;
  std::optional<double> noise_std;
  std::optional<double> mu;
  int k = 2;
  int n_min = 2;
  int n_max = 16384;

  void Validate() const;
};

// What a command produced: the artifact text, a short summary for the
// terminal when the artifact goes to a file, and the exit code.
struct CommandResult {
  int exit_code = kExitPass;
  std::string artifact;
  std::string summary;
};

CommandResult AnalyzeSignals(const RunConfig& config);
CommandResult Verify(const RunConfig& config);
CommandResult ScanNCommand(const RunConfig& config);
CommandResult DemoCollapse(const RunConfig& config);

nlohmann::json CurveJson(const PrivacyCurve& curve);

// Curve computed with exact rational gamma at every grid point.
PrivacyCurve RationalPrivacyCurve(const SignalStructure& signals,
                                  const EpsGrid& grid, std::string id);

// Parses argv, dispatches, writes the artifact and returns the exit code.
// Library errors are mapped onto exit codes here.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dprepeat::cli

#endif  // DPREPEAT_CLI_CLI_H_
