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

#include "support/random_instances.h"

#include <algorithm>
#include <numeric>

#include "dprepeat/families/discretize.h"

namespace dprepeat::testing {

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> RandomDistribution(Rng& rng, int size, double zero_prob) {
  std::vector<double> w(size);
  for (double& x : w) x = Uniform(rng, 0.05, 1.0);
  if (zero_prob > 0.0) {
    for (double& x : w) {
      if (Uniform(rng) < zero_prob) x = 0.0;
    }
    if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) {
      w[UniformInt(rng, 0, size - 1)] = 1.0;
    }
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  // Absorb rounding into the largest entry.
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  *std::max_element(w.begin(), w.end()) += 1.0 - sum;
  return w;
}

std::vector<double> RandomDyadicDistribution(Rng& rng, int size,
                                             bool full_support) {
  constexpr int kUnits = 64;
  std::vector<int> units(size, full_support ? 1 : 0);
  int left = kUnits - std::accumulate(units.begin(), units.end(), 0);
  while (left-- > 0) ++units[UniformInt(rng, 0, size - 1)];
  std::vector<double> out(size);
  for (int s = 0; s < size; ++s) out[s] = static_cast<double>(units[s]) / kUnits;
  return out;
}

StageGame RandomExplicitGame(Rng& rng, std::vector<int> action_counts) {
  std::int64_t profiles = 1;
  for (int c : action_counts) profiles *= c;
  std::vector<double> payoffs(profiles * action_counts.size());
  for (double& u : payoffs) u = Uniform(rng);
  return StageGame::Explicit(std::move(action_counts), std::move(payoffs));
}

MixedProfile RandomProfile(Rng& rng, const std::vector<int>& action_counts) {
  std::vector<std::vector<double>> s;
  for (int c : action_counts) s.push_back(RandomDistribution(rng, c, 0.2));
  return MixedProfile(std::move(s));
}

namespace {

std::vector<std::string> Labels(int count) {
  std::vector<std::string> labels;
  for (int s = 0; s < count; ++s) labels.push_back("s" + std::to_string(s));
  return labels;
}

std::vector<double> Row(Rng& rng, int size, bool full_support, bool dyadic) {
  if (dyadic) return RandomDyadicDistribution(rng, size, full_support);
  return RandomDistribution(rng, size, full_support ? 0.0 : 0.3);
}

}  // namespace

SignalStructure RandomPublicSignals(Rng& rng, const OutcomeSpace& outcomes,
                                    int num_signals, bool full_support,
                                    bool dyadic) {
  std::vector<std::vector<double>> dist;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    dist.push_back(Row(rng, num_signals, full_support, dyadic));
  }
  return SignalStructure(outcomes, SignalStructure::Kind::kPublic,
                         Labels(num_signals), std::move(dist));
}

SignalStructure RandomPrivateSignals(Rng& rng, const OutcomeSpace& outcomes,
                                     int num_signals, bool full_support,
                                     bool dyadic) {
  int points = 1;
  for (int i = 0; i < outcomes.num_players(); ++i) points *= num_signals;
  std::vector<std::vector<double>> dist;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    dist.push_back(Row(rng, points, full_support, dyadic));
  }
  return SignalStructure(outcomes, SignalStructure::Kind::kPrivate,
                         Labels(num_signals), std::move(dist));
}

SignalStructure RandomGaussianSignals(Rng& rng, const OutcomeSpace& outcomes,
                                      double spread, double noise_std,
                                      int max_signals) {
  std::vector<std::vector<double>> centers;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    centers.push_back({Uniform(rng, 0.0, spread)});
  }
  double lo = centers[0][0];
  double hi = lo;
  for (const auto& c : centers) {
    lo = std::min(lo, c[0]);
    hi = std::max(hi, c[0]);
  }
  const double truncation = 4.0;
  const double range = hi - lo + 2.0 * truncation * noise_std;
  const double width = range / (max_signals - 0.5);
  return DiscretizeGaussianSignal(outcomes, centers, noise_std, width,
                                  truncation);
}

PublicStrategyAutomaton RandomPublicAutomaton(
    Rng& rng, const std::vector<int>& action_counts, int num_states,
    int num_signals, double pure_prob, bool dyadic) {
  PublicStrategyAutomaton a;
  a.initial = 0;
  for (int w = 0; w < num_states; ++w) {
    std::vector<std::vector<double>> rule;
    for (int c : action_counts) {
      if (Uniform(rng) < pure_prob) {
        std::vector<double> pure(c, 0.0);
        pure[UniformInt(rng, 0, c - 1)] = 1.0;
        rule.push_back(std::move(pure));
      } else {
        rule.push_back(dyadic ? RandomDyadicDistribution(rng, c, false)
                              : RandomDistribution(rng, c, 0.2));
      }
    }
    a.decision.push_back(std::move(rule));
    std::vector<int> next(num_signals);
    for (int& v : next) v = UniformInt(rng, 0, num_states - 1);
    a.transition.push_back(std::move(next));
  }
  return a;
}

StrategyProfile RandomStrategyProfile(Rng& rng,
                                      const std::vector<int>& action_counts,
                                      int max_states, int num_signals,
                                      bool dyadic) {
  StrategyProfile profile;
  for (int c : action_counts) {
    PlayerAutomaton p;
    const int states = UniformInt(rng, 1, max_states);
    for (int w = 0; w < states; ++w) {
      p.decision.push_back(dyadic ? RandomDyadicDistribution(rng, c, false)
                                  : RandomDistribution(rng, c, 0.3));
      std::vector<std::vector<int>> rows(c, std::vector<int>(num_signals));
      for (auto& row : rows) {
        for (int& v : row) v = UniformInt(rng, 0, states - 1);
      }
      p.transition.push_back(std::move(rows));
    }
    profile.players.push_back(std::move(p));
  }
  return profile;
}

PublicStrategyAutomaton Repeat(const MixedProfile& profile, int num_signals) {
  PublicStrategyAutomaton a;
  a.decision = {profile.strategies()};
  a.transition = {std::vector<int>(num_signals, 0)};
  return a;
}

}  // namespace dprepeat::testing
