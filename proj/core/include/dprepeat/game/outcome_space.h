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

#ifndef DPREPEAT_GAME_OUTCOME_SPACE_H_
#define DPREPEAT_GAME_OUTCOME_SPACE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dprepeat {

// Largest outcome space any structure is allowed to materialize.
inline constexpr std::int64_t kMaxOutcomes = 1'000'000;

// The set of stage outcomes that payoffs and signal distributions are keyed
// by. For an explicit game this is the set of pure action profiles. For an
// anonymous game only the action histogram matters, so an outcome is a
// multiset count vector over the shared action set (exact counts, summing to
// the player count).
class OutcomeSpace {
 public:
  enum class Kind { kProfile, kHistogram };

  OutcomeSpace() = default;

  static OutcomeSpace Profiles(std::vector<int> action_counts);
  static OutcomeSpace Histograms(int num_players, int num_actions);

  Kind kind() const { return kind_; }
  bool anonymous() const { return kind_ == Kind::kHistogram; }
  int num_players() const { return num_players_; }
  int num_actions(int player) const;
  const std::vector<int>& action_counts() const { return action_counts_; }
  std::int64_t size() const { return size_; }

  // Outcome reached by a pure action profile.
  std::int64_t Encode(std::span<const int> profile) const;
  // Outcome with the given coordinates: a profile for kProfile, a histogram
  // of counts for kHistogram.
  std::int64_t FromCoordinates(std::span<const int> coordinates) const;
  std::vector<int> Coordinates(std::int64_t outcome) const;

  // Comma-joined coordinates, e.g. "0,2,1".
  std::string Key(std::int64_t outcome) const;
  std::int64_t ParseKey(const std::string& key) const;

  // Calls visit(from, to, player, from_action, to_action) for every ordered
  // pair of outcomes that differ by one player's unilateral action change.
  // Histogram spaces report player = -1 (players are interchangeable).
  template <class Visit>
  void ForEachNeighborPair(Visit&& visit) const;

  bool operator==(const OutcomeSpace&) const = default;

 private:
  Kind kind_ = Kind::kProfile;
  int num_players_ = 0;
  std::vector<int> action_counts_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_ = 0;
};

// Rank/unrank of count vectors (compositions of `total` into `parts`
// nonnegative parts) in lexicographic order.
std::int64_t CountCompositions(int total, int parts);
std::int64_t RankComposition(std::span<const int> counts);
std::vector<int> UnrankComposition(std::int64_t rank, int total, int parts);

template <class Visit>
void OutcomeSpace::ForEachNeighborPair(Visit&& visit) const {
  if (kind_ == Kind::kProfile) {
    for (std::int64_t from = 0; from < size_; ++from) {
      for (int player = 0; player < num_players_; ++player) {
        const int own = static_cast<int>((from / strides_[player]) %
                                         action_counts_[player]);
        for (int alt = 0; alt < action_counts_[player]; ++alt) {
          if (alt == own) continue;
          const std::int64_t to = from + (alt - own) * strides_[player];
          visit(from, to, player, own, alt);
        }
      }
    }
    return;
  }
  const int k = action_counts_[0];
  for (std::int64_t from = 0; from < size_; ++from) {
    std::vector<int> counts = Coordinates(from);
    for (int own = 0; own < k; ++own) {
      if (counts[own] == 0) continue;
      for (int alt = 0; alt < k; ++alt) {
        if (alt == own) continue;
        --counts[own];
        ++counts[alt];
        visit(from, RankComposition(counts), -1, own, alt);
        ++counts[own];
        --counts[alt];
      }
    }
  }
}

}  // namespace dprepeat

#endif  // DPREPEAT_GAME_OUTCOME_SPACE_H_
