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

#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "dprepeat/errors.h"
#include "dprepeat/repeated/history.h"
#include "support/fixtures.h"
#include "support/oracles.h"
#include "support/random_instances.h"

namespace dprepeat {
namespace {

using testing::JointPath;
using testing::Rng;

std::vector<std::vector<int>> AllHistories(int num_signals, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int t = 0; t < length; ++t) {
    std::vector<std::vector<int>> next;
    for (const auto& h : out) {
      for (int s = 0; s < num_signals; ++s) {
        auto g = h;
        g.push_back(s);
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

Rational PublicProbability(const std::vector<JointPath>& paths,
                           const std::vector<int>& history) {
  Rational total = 0;
  for (const auto& p : paths) {
    bool match = true;
    for (std::size_t k = 0; k < history.size(); ++k) {
      match = match && p.observations[k][0] == history[k];
    }
    if (match) total += p.probability;
  }
  return total;
}

TEST(ConditionalPlay, PublicStrategiesGiveAutomatonDecision) {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<int> counts{2, 3};
    const auto game = testing::RandomExplicitGame(rng, counts);
    const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true, true);
    const auto a = testing::RandomPublicAutomaton(rng, counts, 3, 2, 0.5, true);
    const auto strategies = ToStrategyProfile(a);
    for (int len = 0; len < 4; ++len) {
      for (const auto& h : AllHistories(2, len)) {
        int w = a.initial;
        for (int s : h) w = a.transition[w][s];
        const auto play =
            ConditionalPlayDistribution<Rational>(game, sig, strategies, h);
        for (int i = 0; i < 2; ++i) {
          for (int x = 0; x < counts[i]; ++x) {
            EXPECT_EQ(play.sigma_hat[i][x], ToRational(a.decision[w][i][x]));
          }
        }
      }
    }
  }
}

TEST(ConditionalPlay, EmptyHistoryIsInitialDecision) {
  Rng rng(52);
  const std::vector<int> counts{3, 2};
  const auto game = testing::RandomExplicitGame(rng, counts);
  const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 3, true);
  const auto strategies = testing::RandomStrategyProfile(rng, counts, 3, 3);
  const auto play = ConditionalPlayDistribution<double>(game, sig, strategies, {});
  EXPECT_EQ(play.probability, 1.0);
  for (int i = 0; i < 2; ++i) {
    const auto& p = strategies.players[i];
    EXPECT_EQ(play.sigma_hat[i], p.decision[p.initial]);
  }
}

TEST(ConditionalPlay, MatchesPerPlayerDecomposition) {
  Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const std::vector<int> counts{2, testing::UniformInt(rng, 2, 3)};
    const auto game = testing::RandomExplicitGame(rng, counts);
    const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true, true);
    const auto strategies = testing::RandomStrategyProfile(rng, counts, 3, 2, true);
    const auto paths = testing::EnumerateJointPaths(game, sig, strategies, 3);
    for (const auto& h : AllHistories(2, 3)) {
      const auto play =
          ConditionalPlayDistribution<Rational>(game, sig, strategies, h);
      EXPECT_EQ(play.probability, PublicProbability(paths, h));
      EXPECT_EQ(play.sigma_hat, testing::SigmaHatOracle(paths, strategies, h));
    }
  }
}

TEST(ConditionalPlay, MatchesConditionedSimulation) {
  Rng rng(54);
  const std::vector<int> counts{2, 2};
  const auto game = testing::RandomExplicitGame(rng, counts);
  const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true);
  const auto strategies = testing::RandomStrategyProfile(rng, counts, 3, 2);
  const std::vector<int> target{0, 1};
  const auto play =
      ConditionalPlayDistribution<double>(game, sig, strategies, target);
  std::vector<std::vector<double>> sum(2, std::vector<double>(2, 0.0));
  int hits = 0;
  for (int r = 0; r < 1'000'000; ++r) {
    std::vector<int> w{strategies.players[0].initial,
                       strategies.players[1].initial};
    bool match = true;
    for (int t = 0; t < 2 && match; ++t) {
      std::vector<int> a(2);
      for (int j = 0; j < 2; ++j) {
        const auto& d = strategies.players[j].decision[w[j]];
        a[j] = std::discrete_distribution<int>(d.begin(), d.end())(rng);
      }
      const auto dist = sig.Distribution(game.outcomes().Encode(a));
      const int s = std::discrete_distribution<int>(dist.begin(), dist.end())(rng);
      match = s == target[t];
      for (int j = 0; j < 2; ++j) w[j] = strategies.Next(j, w[j], a[j], s);
    }
    if (!match) continue;
    ++hits;
    for (int j = 0; j < 2; ++j) {
      for (int x = 0; x < 2; ++x) {
        sum[j][x] += strategies.players[j].decision[w[j]][x];
      }
    }
  }
  ASSERT_GT(hits, 50'000);
  for (int j = 0; j < 2; ++j) {
    double tv = 0.0;
    for (int x = 0; x < 2; ++x) tv += std::abs(sum[j][x] / hits - play.sigma_hat[j][x]);
    EXPECT_LE(0.5 * tv, 3e-3);
  }
}

TEST(ConditionalPlay, ZeroProbabilityHistory) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::DefectionAlarm(game.outcomes(), 0.0, 0.5);
  const auto strategies = ToStrategyProfile(testing::GrimTriggerPublic(2, 0));
  const std::vector<int> low{1};
  try {
    ConditionalPlayDistribution<double>(game, sig, strategies, low);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroProbability);
  }
}

TEST(ConditionalPlay, OpponentPlayFactorsForPublicStrategies) {
  Rng rng(55);
  const std::vector<int> counts{2, 2, 2};
  const auto game = testing::RandomExplicitGame(rng, counts);
  const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true, true);
  const auto strategies =
      ToStrategyProfile(testing::RandomPublicAutomaton(rng, counts, 3, 2, 0.5, true));
  const auto paths = testing::EnumerateJointPaths(game, sig, strategies, 2);
  for (const auto& h : AllHistories(2, 2)) {
    std::map<std::vector<int>, Rational> joint;
    Rational total = 0;
    for (const auto& p : paths) {
      if (p.observations[0][0] != h[0] || p.observations[1][0] != h[1]) continue;
      total += p.probability;
      for (const auto& a : testing::AllProfiles(counts)) {
        Rational q = p.probability;
        for (int j = 0; j < 3; ++j) {
          q *= ToRational(strategies.players[j].decision[p.states[2][j]][a[j]]);
        }
        joint[a] += q;
      }
    }
    const auto marginals = testing::SigmaHatOracle(paths, strategies, h);
    for (const auto& [a, q] : joint) {
      EXPECT_EQ(q / total,
                marginals[0][a[0]] * marginals[1][a[1]] * marginals[2][a[2]]);
    }
  }
}

// With three players the others' private bookkeeping can be correlated
// through the common signal, so their day-t play given the public history
// need not be a product. The per-player marginals are still exact.
TEST(ConditionalPlay, OpponentPlayCanCorrelateWithThreePlayers) {
  const std::vector<int> counts{2, 2, 2};
  const auto outcomes = OutcomeSpace::Profiles(counts);
  const auto game = StageGame::Explicit(counts, [](int, std::span<const int>) {
    return 0.5;
  });
  // Signal 1 exactly when players 1 and 2 disagree.
  std::vector<std::vector<double>> dist;
  for (const auto& a : testing::AllProfiles(counts)) {
    dist.push_back(a[1] != a[2] ? std::vector<double>{0.0, 1.0}
                                : std::vector<double>{1.0, 0.0});
  }
  const SignalStructure sig(outcomes, SignalStructure::Kind::kPublic,
                            {"same", "differ"}, dist);
  // Mix once, then repeat the first action forever.
  PlayerAutomaton echo;
  echo.decision = {{0.5, 0.5}, {1.0, 0.0}, {0.0, 1.0}};
  echo.transition = {{{1, 1}, {2, 2}}, {{1, 1}, {1, 1}}, {{2, 2}, {2, 2}}};
  const StrategyProfile strategies{{echo, echo, echo}};
  const std::vector<int> h{0};
  const auto paths = testing::EnumerateJointPaths(game, sig, strategies, 1);
  const auto marginals = testing::SigmaHatOracle(paths, strategies, h);
  const auto play = ConditionalPlayDistribution<Rational>(game, sig, strategies, h);
  EXPECT_EQ(play.sigma_hat, marginals);
  // Players 1 and 2 agree for sure, yet each marginal is uniform.
  EXPECT_EQ(marginals[1][0], Rational(1, 2));
  EXPECT_EQ(marginals[2][0], Rational(1, 2));
  Rational both_c = 0;
  Rational total = 0;
  for (const auto& p : paths) {
    if (p.observations[0][0] != h[0]) continue;
    total += p.probability;
    if (p.states[1][1] == 1 && p.states[1][2] == 1) both_c += p.probability;
  }
  EXPECT_EQ(both_c / total, Rational(1, 2));
  EXPECT_NE(both_c / total, marginals[1][0] * marginals[2][0]);
}

TEST(Beliefs, FirstPeriodIsInitialStates) {
  Rng rng(56);
  const std::vector<int> counts{2, 2};
  const auto game = testing::RandomExplicitGame(rng, counts);
  const auto sig = testing::RandomPrivateSignals(rng, game.outcomes(), 2, true);
  const auto strategies = testing::RandomStrategyProfile(rng, counts, 3, 2);
  const auto beliefs = TrackBeliefs<double>(game, sig, strategies, 1);
  ASSERT_EQ(beliefs.size(), 2u);
  for (const auto& b : beliefs) {
    EXPECT_EQ(b.history.Label(), "-");
    ASSERT_EQ(b.posterior.size(), 1u);
    EXPECT_EQ(b.posterior[0].first,
              (std::vector<int>{strategies.players[0].initial,
                                strategies.players[1].initial}));
    EXPECT_EQ(b.posterior[0].second, 1.0);
  }
}

TEST(Beliefs, UninformativeSignalsGiveForwardPropagation) {
  Rng rng(57);
  const std::vector<int> counts{2, 2};
  const auto game = testing::RandomExplicitGame(rng, counts);
  // Independent across players and independent of the actions.
  const auto m0 = testing::RandomDyadicDistribution(rng, 2, true);
  const auto m1 = testing::RandomDyadicDistribution(rng, 2, true);
  const std::vector<double> row{m0[0] * m1[0], m0[0] * m1[1], m0[1] * m1[0],
                                m0[1] * m1[1]};
  const SignalStructure sig(game.outcomes(), SignalStructure::Kind::kPrivate,
                            {"x", "y"}, std::vector<std::vector<double>>(4, row));
  const auto strategies = testing::RandomStrategyProfile(rng, counts, 3, 2, true);
  const int horizon = 4;
  const auto beliefs = TrackBeliefs<Rational>(game, sig, strategies, horizon);
  for (const auto& b : beliefs) {
    const int other = 1 - b.player;
    const auto paths =
        testing::EnumerateJointPaths(game, sig, strategies, b.history.length());
    std::map<int, Rational> forward;
    for (const auto& p : paths) forward[p.states.back()[other]] += p.probability;
    std::map<int, Rational> posterior;
    for (const auto& [states, q] : b.posterior) posterior[states[other]] += q;
    for (const auto& [w, q] : forward) {
      if (q == 0) continue;
      EXPECT_EQ(posterior[w], q) << b.history.Label();
    }
  }
}

TEST(Beliefs, MatchJointPathOracleExactly) {
  Rng rng(58);
  for (int trial = 0; trial < 8; ++trial) {
    const std::vector<int> counts{2, 2};
    const auto game = testing::RandomExplicitGame(rng, counts);
    const auto sig =
        testing::RandomPrivateSignals(rng, game.outcomes(), 2, trial % 2 == 0, true);
    const auto strategies = testing::RandomStrategyProfile(rng, counts, 2, 2, true);
    const int horizon = 4;
    std::vector<std::vector<JointPath>> paths;
    for (int t = 0; t < horizon; ++t) {
      paths.push_back(testing::EnumerateJointPaths(game, sig, strategies, t));
    }
    const auto beliefs = TrackBeliefs<Rational>(game, sig, strategies, horizon);
    ASSERT_FALSE(beliefs.empty());
    for (const auto& b : beliefs) {
      const auto oracle = testing::PosteriorOracle(
          paths[b.history.length()], b.player, b.history.actions, b.history.signals);
      std::map<std::vector<int>, Rational> mine;
      Rational sum = 0;
      for (const auto& [states, q] : b.posterior) {
        sum += q;
        if (q != 0) mine[states] = q;
        EXPECT_EQ(states[b.player], b.own_state);
      }
      EXPECT_EQ(sum, 1);
      EXPECT_EQ(mine, oracle) << b.history.Label();
    }
    // Double precision agrees with the exact posteriors.
    const auto approx = TrackBeliefs<double>(game, sig, strategies, horizon);
    ASSERT_EQ(approx.size(), beliefs.size());
    for (std::size_t k = 0; k < approx.size(); ++k) {
      double sum = 0.0;
      for (const auto& [states, q] : approx[k].posterior) sum += q;
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(Beliefs, ZeroProbabilityHistory) {
  const auto sig = testing::NoisyOpponentSignals(0.0);
  const auto game = testing::PrisonersDilemma();
  const auto strategies = testing::PrivateTrigger(0, 1);
  PrivateHistory h{{1}, {1}};  // opponent cooperated, yet alarm observed
  try {
    BeliefAt<double>(game, sig, strategies, 0, h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroProbability);
  }
}

TEST(History, LabelsAndGuards) {
  EXPECT_EQ((PrivateHistory{{0, 1}, {1, 0}}).Label(), "a0s1.a1s0");
  const std::vector<int> h{0, 1, 2};
  EXPECT_EQ(PublicHistoryLabel(h), "0.1.2");
  EXPECT_EQ(PublicHistoryLabel({}), "-");
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::NoisyOpponentSignals(0.1);
  const auto strategies = testing::PrivateTrigger(0, 1);
  try {
    TrackBeliefs<double>(game, sig, strategies, kMaxPrivateHorizon + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGuard);
  }
  const auto wide = testing::PerfectMonitoring(OutcomeSpace::Profiles({3, 3, 3}));
  EXPECT_GT(JointPathCount(wide, 6), kMaxJointPaths);
}

}  // namespace
}  // namespace dprepeat
