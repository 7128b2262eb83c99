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

#ifndef DPREPEAT_GAME_SIGNAL_STRUCTURE_H_
#define DPREPEAT_GAME_SIGNAL_STRUCTURE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dprepeat/game/outcome_space.h"

namespace dprepeat {

// Ex-post payoffs U_i(a_i, s): [player][own action][signal]. Anonymous games
// carry a single shared table.
using ExPostPayoffs = std::vector<std::vector<std::vector<double>>>;

// Monitoring technology: for every stage outcome a distribution over signal
// points. A public structure draws one signal from S that every player sees.
// A private structure draws a vector in S^n; player i observes component i.
// Points of S^n are indexed with player 0 most significant.
class SignalStructure {
 public:
  enum class Kind { kPublic, kPrivate };

  SignalStructure() = default;
  // dist[outcome] has num_points() entries; each row must be a probability
  // vector within 1e-12.
  SignalStructure(OutcomeSpace outcomes, Kind kind,
                  std::vector<std::string> labels,
                  std::vector<std::vector<double>> dist,
                  std::optional<ExPostPayoffs> expost = std::nullopt);

  const OutcomeSpace& outcomes() const { return outcomes_; }
  Kind kind() const { return kind_; }
  bool is_public() const { return kind_ == Kind::kPublic; }
  int num_signals() const { return static_cast<int>(labels_.size()); }
  std::int64_t num_points() const { return num_points_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::span<const double> Distribution(std::int64_t outcome) const {
    return dist_[outcome];
  }
  double Prob(std::int64_t outcome, std::int64_t point) const {
    return dist_[outcome][point];
  }
  const std::vector<std::vector<double>>& table() const { return dist_; }

  // Signal observed by `player` at a point (the point itself when public).
  int Observation(std::int64_t point, int player) const;
  std::vector<int> Observations(std::int64_t point) const;
  std::int64_t PointFromSignals(std::span<const int> signals) const;

  const std::optional<ExPostPayoffs>& expost() const { return expost_; }

  // Same structure with every player seeing the public signal, as a private
  // structure over S^n.
  SignalStructure EmbedAsPrivate() const;

 private:
  OutcomeSpace outcomes_;
  Kind kind_ = Kind::kPublic;
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> dist_;
  std::int64_t num_points_ = 0;
  std::optional<ExPostPayoffs> expost_;
};

// Device for a stage correlated equilibrium: a joint distribution over
// per-player signal tuples and a map from each player's signal to a mixed
// action. Signal sets may differ in size across players.
struct CorrelatedDevice {
  struct Entry {
    std::vector<int> signals;
    double prob = 0.0;
  };
  std::vector<int> signal_counts;
  std::vector<Entry> joint;  // sparse; zero entries may be omitted
  // recommendation[player][signal] -> mixed action
  std::vector<std::vector<std::vector<double>>> recommendation;

  // Throws unless the joint sums to one and every map is normalized.
  void Validate(const OutcomeSpace& outcomes) const;
};

}  // namespace dprepeat

#endif  // DPREPEAT_GAME_SIGNAL_STRUCTURE_H_
