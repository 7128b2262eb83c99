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

#include "dprepeat/game/outcome_space.h"

#include <numeric>
#include <sstream>

#include "dprepeat/errors.h"

namespace dprepeat {

std::int64_t CountCompositions(int total, int parts) {
  if (parts <= 0) return total == 0 ? 1 : 0;
  if (total < 0) return 0;
  // C(total + parts - 1, parts - 1), computed incrementally; every partial
  // product is itself a binomial coefficient so division stays exact.
  const int choose = parts - 1;
  std::int64_t result = 1;
  for (int j = 1; j <= choose; ++j) {
    const std::int64_t numerator = static_cast<std::int64_t>(total) + j;
    if (result > (std::int64_t{1} << 62) / numerator) {
      Fail(ErrorKind::kGuard, "composition count overflows");
    }
    result = result * numerator / j;
  }
  return result;
}

std::int64_t RankComposition(std::span<const int> counts) {
  const int parts = static_cast<int>(counts.size());
  int remaining = std::accumulate(counts.begin(), counts.end(), 0);
  std::int64_t rank = 0;
  for (int j = 0; j + 1 < parts; ++j) {
    // Compositions whose j-th entry is below counts[j], summed in closed form.
    rank += CountCompositions(remaining, parts - j) -
            CountCompositions(remaining - counts[j], parts - j);
    remaining -= counts[j];
  }
  return rank;
}

std::vector<int> UnrankComposition(std::int64_t rank, int total, int parts) {
  std::vector<int> counts(parts, 0);
  int remaining = total;
  for (int j = 0; j + 1 < parts; ++j) {
    // Largest v with (compositions whose j-th entry is below v) <= rank.
    const std::int64_t all = CountCompositions(remaining, parts - j);
    int lo = 0;
    int hi = remaining;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (all - CountCompositions(remaining - mid, parts - j) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    rank -= all - CountCompositions(remaining - lo, parts - j);
    counts[j] = lo;
    remaining -= lo;
  }
  counts[parts - 1] = remaining;
  return counts;
}

OutcomeSpace OutcomeSpace::Profiles(std::vector<int> action_counts) {
  Require(!action_counts.empty(), "a game needs at least one player");
  OutcomeSpace space;
  space.kind_ = Kind::kProfile;
  space.num_players_ = static_cast<int>(action_counts.size());
  space.strides_.assign(action_counts.size(), 1);
  std::int64_t size = 1;
  for (int i = space.num_players_ - 1; i >= 0; --i) {
    Require(action_counts[i] >= 1, "every player needs at least one action");
    space.strides_[i] = size;
    size *= action_counts[i];
    if (size > kMaxOutcomes) {
      Fail(ErrorKind::kGuard, "profile space exceeds " +
                                  std::to_string(kMaxOutcomes) + " outcomes");
    }
  }
  space.size_ = size;
  space.action_counts_ = std::move(action_counts);
  return space;
}

OutcomeSpace OutcomeSpace::Histograms(int num_players, int num_actions) {
  Require(num_players >= 1, "a game needs at least one player");
  Require(num_actions >= 1, "every player needs at least one action");
  OutcomeSpace space;
  space.kind_ = Kind::kHistogram;
  space.num_players_ = num_players;
  space.action_counts_.assign(num_players, num_actions);
  space.size_ = CountCompositions(num_players, num_actions);
  if (space.size_ > kMaxOutcomes) {
    Fail(ErrorKind::kGuard, "histogram space exceeds " +
                                std::to_string(kMaxOutcomes) + " outcomes");
  }
  return space;
}

int OutcomeSpace::num_actions(int player) const {
  Require(player >= 0 && player < num_players_, "player index out of range");
  return action_counts_[player];
}

std::int64_t OutcomeSpace::Encode(std::span<const int> profile) const {
  Require(static_cast<int>(profile.size()) == num_players_,
          "profile length does not match player count");
  for (int i = 0; i < num_players_; ++i) {
    Require(profile[i] >= 0 && profile[i] < action_counts_[i],
            "action index out of range");
  }
  if (kind_ == Kind::kProfile) {
    std::int64_t index = 0;
    for (int i = 0; i < num_players_; ++i) index += profile[i] * strides_[i];
    return index;
  }
  std::vector<int> counts(action_counts_[0], 0);
  for (int a : profile) ++counts[a];
  return RankComposition(counts);
}

std::int64_t OutcomeSpace::FromCoordinates(
    std::span<const int> coordinates) const {
  if (kind_ == Kind::kProfile) return Encode(coordinates);
  Require(static_cast<int>(coordinates.size()) == action_counts_[0],
          "histogram length does not match action count");
  int total = 0;
  for (int c : coordinates) {
    Require(c >= 0, "negative histogram count");
    total += c;
  }
  Require(total == num_players_, "histogram counts must sum to player count");
  return RankComposition(coordinates);
}

std::vector<int> OutcomeSpace::Coordinates(std::int64_t outcome) const {
  Require(outcome >= 0 && outcome < size_, "outcome index out of range");
  if (kind_ == Kind::kHistogram) {
    return UnrankComposition(outcome, num_players_, action_counts_[0]);
  }
  std::vector<int> profile(num_players_);
  for (int i = 0; i < num_players_; ++i) {
    profile[i] = static_cast<int>((outcome / strides_[i]) % action_counts_[i]);
  }
  return profile;
}

std::string OutcomeSpace::Key(std::int64_t outcome) const {
  std::string key;
  for (int c : Coordinates(outcome)) {
    if (!key.empty()) key += ',';
    key += std::to_string(c);
  }
  return key;
}

std::int64_t OutcomeSpace::ParseKey(const std::string& key) const {
  std::vector<int> coordinates;
  std::stringstream stream(key);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      coordinates.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      Fail(ErrorKind::kParse, "malformed outcome key '" + key + "'");
    }
  }
  try {
    return FromCoordinates(coordinates);
  } catch (const Error& e) {
    Fail(ErrorKind::kParse, "invalid outcome key '" + key + "': " + e.what());
  }
}

}  // namespace dprepeat
