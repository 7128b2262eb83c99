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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dprepeat/errors.h"
#include "dprepeat/game/equilibrium.h"
#include "dprepeat/privacy/privacy_curve.h"
#include "dprepeat/repeated/history.h"
#include "dprepeat/repeated/private_verifiers.h"
#include "dprepeat/repeated/public_verifiers.h"
#include "support/fixtures.h"
#include "support/random_instances.h"

namespace dprepeat {
namespace {

using testing::Rng;

int PublicState(const PublicStrategyAutomaton& a, const std::vector<int>& h) {
  int w = a.initial;
  for (int s : h) w = a.transition[w][s];
  return w;
}

std::vector<int> ParsePublicLabel(const std::string& label) {
  std::vector<int> h;
  if (label == "s:-") return h;
  std::size_t pos = 2;
  while (pos < label.size()) {
    const std::size_t dot = label.find('.', pos);
    h.push_back(std::stoi(label.substr(pos, dot - pos)));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return h;
}

// Plays D in every state but remembers its own last action.
StrategyProfile DefectWithBookkeeping() {
  PlayerAutomaton p;
  p.decision = {{0.0, 1.0}, {0.0, 1.0}};
  p.transition = {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}};
  return {{p, p}};
}

TEST(Theorem2, PublicStrategiesReduceToTheorem1) {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<int> counts{2, 3};
    const auto game = testing::RandomExplicitGame(rng, counts);
    const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true);
    const auto a = testing::RandomPublicAutomaton(rng, counts, 3, 2);
    const auto curve = ExactPrivacyCurve(sig);
    const auto t2 =
        VerifyTheorem2(game, sig, ToStrategyProfile(a), 0.8, curve, 4);
    const auto t1 = VerifyTheorem1(game, sig, a, 0.8, curve);
    EXPECT_EQ(t2.eta, t1.eta);
    EXPECT_EQ(t2.per_state.size(), 1u + 2 + 4 + 8);
    for (const auto& e : t2.per_state) {
      const int w = PublicState(a, ParsePublicLabel(e.state));
      EXPECT_NEAR(e.regret, NashRegret(game, a.Profile(w)).max_regret, 1e-12)
          << e.state;
    }
    EXPECT_NEAR(t2.xi_measured, t1.xi_measured, 1e-9);
  }
}

TEST(Theorem2, StageNashWithPrivateBookkeepingPasses) {
  Rng rng(62);
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true);
  const auto report = VerifyTheorem2(game, sig, DefectWithBookkeeping(), 0.9,
                                     ExactPrivacyCurve(sig), 5);
  EXPECT_TRUE(report.passed());
  for (const auto& e : report.per_state) EXPECT_EQ(e.regret, 0.0);
  EXPECT_NEAR(report.xi_measured, 0.0, 1e-12);
  EXPECT_EQ(report.note, "necessary-condition check at horizon 5");
}

TEST(Theorem2, Contract) {
  const auto game = testing::PrisonersDilemma();
  const auto strategies = testing::PrivateTrigger(0, 1);
  const auto priv = testing::NoisyOpponentSignals(0.1);
  try {
    VerifyTheorem2(game, priv, strategies, 0.5, ExactPrivacyCurve(priv), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIncompatible);
  }
  const auto gappy = testing::DefectionAlarm(game.outcomes(), 0.0, 0.5);
  try {
    VerifyTheorem2(game, gappy, strategies, 0.5, ExactPrivacyCurve(gappy), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroProbability);
  }
}

TEST(Theorem4, StageNashRepetitionPasses) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::NoisyOpponentSignals(0.2);
  const auto report = VerifyTheorem4(game, sig, testing::PrivateTrigger(1, 1),
                                     0.9, ExactPrivacyCurve(sig), 5);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.per_state.size(), 2u * (1 + 2 + 4 + 8 + 16));
  for (const auto& e : report.per_state) EXPECT_EQ(e.regret, 0.0);
  EXPECT_EQ(report.xi_measured, 0.0);
}

TEST(Theorem4, EmbeddedPublicStructureMatchesTheorem1) {
  Rng rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<int> counts{2, 2};
    const auto game = testing::RandomExplicitGame(rng, counts);
    const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true);
    const auto a = testing::RandomPublicAutomaton(rng, counts, 3, 2);
    const auto embedded = sig.EmbedAsPrivate();
    const auto strategies = ToStrategyProfile(a);
    const auto curve = ExactPrivacyCurve(sig);
    const auto t4 = VerifyTheorem4(game, embedded, strategies, 0.7,
                                   ExactPrivacyCurve(embedded), 4);
    EXPECT_NEAR(t4.eta, VerifyTheorem1(game, sig, a, 0.7, curve).eta, 1e-12);
    const auto beliefs = TrackBeliefs<double>(game, embedded, strategies, 4);
    ASSERT_EQ(beliefs.size(), t4.per_state.size());
    for (std::size_t k = 0; k < beliefs.size(); ++k) {
      const auto& b = beliefs[k];
      const auto nash = NashRegret(game, a.Profile(b.own_state));
      EXPECT_NEAR(t4.per_state[k].regret, nash.regret[b.player], 1e-10);
    }
  }
}

TEST(Theorem4, NoisedTriggerStaysWithinEta) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::NoisyOpponentSignals(0.45);
  const auto report = VerifyTheorem4(game, sig, testing::PrivateTrigger(0, 1),
                                     0.9, ExactPrivacyCurve(sig), 5);
  EXPECT_LT(report.eta, 1.0);
  for (const auto& e : report.per_state) EXPECT_LE(e.regret, report.eta);
  EXPECT_TRUE(report.passed());
}

TEST(Theorem4, NoiselessTriggerIsFlagged) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::NoisyOpponentSignals(0.0);
  VerifyOptions claimed;
  claimed.slack = SlackMode::kClaimed;
  const auto report = VerifyTheorem4(game, sig, testing::PrivateTrigger(0, 1),
                                     0.2, ExactPrivacyCurve(sig), 5, claimed);
  EXPECT_FALSE(report.passed());
  EXPECT_GE(report.violations(), 1);
  EXPECT_EQ(report.per_state[0].state, "p0|-");
  EXPECT_FALSE(report.per_state[0].pass);
}

TEST(Theorem4, RejectsPublicSignals) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::PerfectMonitoring(game.outcomes());
  try {
    VerifyTheorem4(game, sig, ToStrategyProfile(testing::GrimTriggerPublic(4, 0)),
                   0.5, ExactPrivacyCurve(sig), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIncompatible);
  }
}

TEST(HistoryRegret, DeviationValueAgainstPosterior) {
  // Player 0 in the calm state after observing an alarm once: the opponent
  // is angry (plays D) exactly when it saw player 0's action flagged.
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::NoisyOpponentSignals(0.25);
  const auto strategies = testing::PrivateTrigger(0, 1);
  const auto b = BeliefAt<double>(game, sig, strategies, 0, {{0}, {0}});
  double p_angry = 0.0;
  for (const auto& [states, q] : b.posterior) {
    if (states[1] == 1) p_angry += q;
  }
  EXPECT_NEAR(p_angry, 0.25, 1e-15);
  // Defecting gains 1/3 whatever the opponent does.
  EXPECT_NEAR(HistoryDeviationValue(game, strategies, b, 1), 1.0 / 3, 1e-15);
  const auto r = HistoryCorrelatedRegret(game, strategies, b);
  EXPECT_EQ(r.best_action, 1);
  EXPECT_NEAR(r.regret, 1.0 / 3, 1e-15);
}

}  // namespace
}  // namespace dprepeat
