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

#include "dprepeat/game/equilibrium.h"

#include <map>

#include "dprepeat/errors.h"

namespace dprepeat {
namespace {

// Histogram of the players other than `player` with probabilities.
std::map<std::vector<int>, double> OthersHistogram(
    const OutcomeSpace& outcomes, const MixedProfile& profile, int player) {
  const int k = outcomes.num_actions(0);
  std::map<std::vector<int>, double> current;
  std::vector<int> pure_counts(k, 0);
  bool all_pure = true;
  for (int j = 0; j < outcomes.num_players(); ++j) {
    if (j == player) continue;
    const int a = profile.PureAction(j);
    if (a < 0) {
      all_pure = false;
      break;
    }
    ++pure_counts[a];
  }
  if (all_pure) {
    current.emplace(std::move(pure_counts), 1.0);
    return current;
  }
  current.emplace(std::vector<int>(k, 0), 1.0);
  for (int j = 0; j < outcomes.num_players(); ++j) {
    if (j == player) continue;
    std::map<std::vector<int>, double> next;
    for (const auto& [counts, p] : current) {
      for (int a = 0; a < k; ++a) {
        const double q = profile.prob(j, a);
        if (q == 0.0) continue;
        std::vector<int> c = counts;
        ++c[a];
        next[std::move(c)] += p * q;
      }
    }
    current = std::move(next);
  }
  return current;
}

OutcomeMass ProfileDistribution(const OutcomeSpace& outcomes,
                                const MixedProfile& profile, int player,
                                int own_action) {
  const int n = outcomes.num_players();
  std::vector<std::vector<int>> support(n);
  for (int j = 0; j < n; ++j) {
    if (j == player) {
      support[j] = {own_action};
      continue;
    }
    for (int a = 0; a < outcomes.num_actions(j); ++a) {
      if (profile.prob(j, a) > 0.0) support[j].push_back(a);
    }
  }
  OutcomeMass mass;
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> actions(n);
  while (true) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      actions[j] = support[j][cursor[j]];
      if (j != player) p *= profile.prob(j, actions[j]);
    }
    mass.emplace_back(outcomes.Encode(actions), p);
    int j = n - 1;
    while (j >= 0 && ++cursor[j] == support[j].size()) cursor[j--] = 0;
    if (j < 0) break;
  }
  return mass;
}

}  // namespace

OutcomeMass OutcomeDistribution(const OutcomeSpace& outcomes,
                                const MixedProfile& profile, int player,
                                int own_action) {
  CheckProfileShape(outcomes, profile);
  Require(own_action >= 0 && own_action < outcomes.num_actions(player),
          "action index out of range");
  if (!outcomes.anonymous()) {
    return ProfileDistribution(outcomes, profile, player, own_action);
  }
  OutcomeMass mass;
  for (auto& [counts, p] : OthersHistogram(outcomes, profile, player)) {
    std::vector<int> full = counts;
    ++full[own_action];
    mass.emplace_back(RankComposition(full), p);
  }
  return mass;
}

OutcomeMass OutcomeDistribution(const OutcomeSpace& outcomes,
                                const MixedProfile& profile) {
  CheckProfileShape(outcomes, profile);
  std::map<std::int64_t, double> merged;
  for (int a = 0; a < outcomes.num_actions(0); ++a) {
    const double p = profile.prob(0, a);
    if (p == 0.0) continue;
    for (const auto& [o, q] : OutcomeDistribution(outcomes, profile, 0, a)) {
      merged[o] += p * q;
    }
  }
  return OutcomeMass(merged.begin(), merged.end());
}

std::vector<int> InterchangeablePlayers(const OutcomeSpace& outcomes,
                                        const MixedProfile& profile) {
  const int n = profile.num_players();
  std::vector<int> first(n);
  if (!outcomes.anonymous()) {
    for (int i = 0; i < n; ++i) first[i] = i;
    return first;
  }
  std::map<std::vector<double>, int> seen;
  for (int i = 0; i < n; ++i) {
    const auto& strategy = profile.strategies()[i];
    first[i] = seen.try_emplace(strategy, i).first->second;
  }
  return first;
}

double DeviationPayoff(const StageGame& game, const MixedProfile& profile,
                       int player, int action) {
  double value = 0.0;
  for (const auto& [o, p] :
       OutcomeDistribution(game.outcomes(), profile, player, action)) {
    value += p * game.PayoffAt(player, action, o);
  }
  return value;
}

double ExpectedPayoff(const StageGame& game, const MixedProfile& profile,
                      int player) {
  double value = 0.0;
  for (int a = 0; a < game.num_actions(player); ++a) {
    const double p = profile.prob(player, a);
    if (p == 0.0) continue;
    value += p * DeviationPayoff(game, profile, player, a);
  }
  return value;
}

std::vector<double> ExpectedPayoffs(const StageGame& game,
                                    const MixedProfile& profile) {
  CheckProfileShape(game.outcomes(), profile);
  const std::vector<int> first = InterchangeablePlayers(game.outcomes(), profile);
  std::vector<double> values(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    values[i] = first[i] == i ? ExpectedPayoff(game, profile, i)
                              : values[first[i]];
  }
  return values;
}

std::vector<double> SignalDistribution(const SignalStructure& signals,
                                       const MixedProfile& profile, int player,
                                       int action) {
  std::vector<double> dist(signals.num_points(), 0.0);
  for (const auto& [o, p] :
       OutcomeDistribution(signals.outcomes(), profile, player, action)) {
    const auto row = signals.Distribution(o);
    for (std::size_t s = 0; s < row.size(); ++s) dist[s] += p * row[s];
  }
  return dist;
}

std::vector<double> SignalDistribution(const SignalStructure& signals,
                                       const MixedProfile& profile) {
  std::vector<double> dist(signals.num_points(), 0.0);
  for (const auto& [o, p] : OutcomeDistribution(signals.outcomes(), profile)) {
    const auto row = signals.Distribution(o);
    for (std::size_t s = 0; s < row.size(); ++s) dist[s] += p * row[s];
  }
  return dist;
}

NashRegretReport NashRegret(const StageGame& game,
                            const MixedProfile& profile) {
  CheckProfileShape(game.outcomes(), profile);
  const int n = game.num_players();
  NashRegretReport report;
  report.regret.resize(n);
  report.best_response.resize(n);
  const std::vector<int> first = InterchangeablePlayers(game.outcomes(), profile);
  for (int i = 0; i < n; ++i) {
    if (first[i] != i) {
      report.regret[i] = report.regret[first[i]];
      report.best_response[i] = report.best_response[first[i]];
      continue;
    }
    std::vector<double> deviation(game.num_actions(i));
    double achieved = 0.0;
    for (int a = 0; a < game.num_actions(i); ++a) {
      deviation[a] = DeviationPayoff(game, profile, i, a);
      achieved += profile.prob(i, a) * deviation[a];
    }
    int best = 0;
    for (int a = 1; a < game.num_actions(i); ++a) {
      if (deviation[a] > deviation[best]) best = a;
    }
    report.best_response[i] = best;
    report.regret[i] = std::max(0.0, deviation[best] - achieved);
    if (report.regret[i] > report.max_regret) {
      report.max_regret = report.regret[i];
      report.worst_player = i;
    }
  }
  return report;
}

namespace {

MixedProfile DeviceProfile(const CorrelatedDevice& device,
                           std::span<const int> signals) {
  std::vector<std::vector<double>> strategies;
  strategies.reserve(signals.size());
  for (std::size_t j = 0; j < signals.size(); ++j) {
    strategies.push_back(device.recommendation[j][signals[j]]);
  }
  return MixedProfile(std::move(strategies));
}

}  // namespace

CorrelatedRegretReport CorrelatedRegret(const StageGame& game,
                                        const CorrelatedDevice& device) {
  device.Validate(game.outcomes());
  const int n = game.num_players();
  CorrelatedRegretReport report;
  for (int i = 0; i < n; ++i) {
    const int k = game.num_actions(i);
    // Unnormalized conditional sums: gain[s][a] = sum over joint entries
    // with s_i = s of D * (u_i(a, sigma_-i) - u_i(sigma_i(s), sigma_-i)).
    std::vector<std::vector<double>> gain(device.signal_counts[i],
                                          std::vector<double>(k, 0.0));
    std::vector<double> marginal(device.signal_counts[i], 0.0);
    for (const auto& entry : device.joint) {
      if (entry.prob == 0.0) continue;
      const int s = entry.signals[i];
      const MixedProfile profile = DeviceProfile(device, entry.signals);
      const double prescribed = ExpectedPayoff(game, profile, i);
      marginal[s] += entry.prob;
      for (int a = 0; a < k; ++a) {
        gain[s][a] +=
            entry.prob * (DeviationPayoff(game, profile, i, a) - prescribed);
      }
    }
    for (int s = 0; s < device.signal_counts[i]; ++s) {
      if (marginal[s] <= 0.0) continue;
      CorrelatedRegretReport::Cell cell;
      cell.player = i;
      cell.signal = s;
      cell.marginal = marginal[s];
      cell.best_action = 0;
      for (int a = 1; a < k; ++a) {
        if (gain[s][a] > gain[s][cell.best_action]) cell.best_action = a;
      }
      cell.regret = std::max(0.0, gain[s][cell.best_action] / marginal[s]);
      report.max_regret = std::max(report.max_regret, cell.regret);
      report.cells.push_back(cell);
    }
  }
  return report;
}

double ConditionalDeviationValue(const StageGame& game,
                                 const CorrelatedDevice& device, int player,
                                 int signal, int action) {
  device.Validate(game.outcomes());
  double marginal = 0.0;
  double gain = 0.0;
  for (const auto& entry : device.joint) {
    if (entry.prob == 0.0 || entry.signals[player] != signal) continue;
    const MixedProfile profile = DeviceProfile(device, entry.signals);
    marginal += entry.prob;
    gain += entry.prob * (DeviationPayoff(game, profile, player, action) -
                          ExpectedPayoff(game, profile, player));
  }
  if (marginal <= 0.0) {
    Fail(ErrorKind::kZeroProbability,
         "signal " + std::to_string(signal) + " of player " +
             std::to_string(player) + " has zero marginal probability");
  }
  return gain / marginal;
}

}  // namespace dprepeat
