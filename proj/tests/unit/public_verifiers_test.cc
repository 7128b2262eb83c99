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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "dprepeat/errors.h"
#include "dprepeat/game/equilibrium.h"
#include "dprepeat/privacy/privacy_curve.h"
#include "dprepeat/repeated/public_verifiers.h"
#include "dprepeat/repeated/values.h"
#include "support/fixtures.h"
#include "support/random_instances.h"

namespace dprepeat {
namespace {

using testing::Rng;

TEST(Theorem1, StageNashRepetitionPasses) {
  Rng rng(41);
  const auto game = testing::PrisonersDilemma();
  const std::vector<int> dd{1, 1};
  const auto automaton =
      testing::Repeat(MixedProfile::Pure(game.action_counts(), dd), 2);
  for (double delta : {0.0, 0.5, 0.99}) {
    const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 2, true);
    const auto report =
        VerifyTheorem1(game, sig, automaton, delta, ExactPrivacyCurve(sig));
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.xi, 0.0);
    ASSERT_EQ(report.per_state.size(), 1u);
    EXPECT_NEAR(report.per_state[0].regret, 0.0, 1e-15);
  }
}

TEST(Theorem1, PerfectMonitoringIsUninformative) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::PerfectMonitoring(game.outcomes());
  const auto curve = ExactPrivacyCurve(sig);
  for (double g : curve.gamma) EXPECT_EQ(g, 1.0);
  const auto report =
      VerifyTheorem1(game, sig, testing::GrimTriggerPublic(4, 0), 0.9, curve);
  EXPECT_FALSE(report.informative());
  EXPECT_TRUE(report.passed());
  EXPECT_FALSE(report.note.empty());
  EXPECT_EQ(report.xi, 0.0);
}

TEST(Theorem1, EtaIsCurveMinimum) {
  Rng rng(42);
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 3, true);
  const auto curve = ExactPrivacyCurve(sig);
  const auto report = VerifyTheorem1(game, sig, testing::GrimTriggerPublic(3, 0),
                                     0.75, curve);
  EXPECT_NEAR(report.eta, 3.0 * curve.minimizer.sum(), 1e-15);
  for (std::size_t k = 0; k < curve.eps.size(); ++k) {
    EXPECT_LE(report.eta, 3.0 * (curve.eps[k] + curve.gamma[k]) + 1e-12);
  }
}

TEST(Theorem1, RandomSweepHasNoViolations) {
  Rng rng(43);
  int informative = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::UniformInt(rng, 2, 3);
    std::vector<int> counts(n);
    for (int& c : counts) c = testing::UniformInt(rng, 2, 3);
    const auto game = testing::RandomExplicitGame(rng, counts);
    const auto sig = testing::RandomGaussianSignals(
        rng, game.outcomes(), 0.2, 0.5, testing::UniformInt(rng, 2, 6));
    const auto automaton = testing::RandomPublicAutomaton(
        rng, counts, testing::UniformInt(rng, 1, 5), sig.num_signals());
    for (double delta : {0.3, 0.9}) {
      const auto report = VerifyTheorem1(game, sig, automaton, delta,
                                         ExactPrivacyCurve(sig));
      EXPECT_TRUE(report.passed()) << "trial " << trial;
      informative += report.informative();
    }
  }
  EXPECT_GT(informative, 0);
}

TEST(Theorem1, RejectsPrivateSignals) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::PerfectMonitoring(game.outcomes());
  try {
    VerifyTheorem1(game, sig.EmbedAsPrivate(), testing::GrimTriggerPublic(4, 0),
                   0.5, ExactPrivacyCurve(sig));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIncompatible);
  }
}

// Defection forever, with a cooperative state that only the signal "low"
// leads to; "low" never occurs while both defect.
struct UnreachableFixture {
  StageGame game = testing::PrisonersDilemma();
  SignalStructure sig;
  PublicStrategyAutomaton automaton;
  UnreachableFixture() {
    std::vector<std::vector<double>> dist(4, {0.5, 0.5});
    dist[3] = {1.0, 0.0};
    sig = SignalStructure(game.outcomes(), SignalStructure::Kind::kPublic,
                          {"high", "low"}, dist);
    automaton.decision = {{{0.0, 1.0}, {0.0, 1.0}}, {{1.0, 0.0}, {1.0, 0.0}}};
    automaton.transition = {{0, 1}, {0, 0}};
  }
};

TEST(Theorem3, UnreachableStatesAreIgnored) {
  const UnreachableFixture f;
  const auto curve = ExactPrivacyCurve(f.sig);
  VerifyOptions claimed;
  claimed.slack = SlackMode::kClaimed;
  const auto t1 = VerifyTheorem1(f.game, f.sig, f.automaton, 0.1, curve, claimed);
  EXPECT_FALSE(t1.passed());
  const auto t3 = VerifyTheorem3(f.game, f.sig, f.automaton, 0.1, curve);
  EXPECT_TRUE(t3.passed());
  ASSERT_EQ(t3.per_state.size(), 1u);
  EXPECT_EQ(t3.per_state[0].state, "w0");
  EXPECT_EQ(t3.xi, 0.0);
}

TEST(Theorem3, StageNashRepetitionPasses) {
  Rng rng(44);
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::RandomPublicSignals(rng, game.outcomes(), 3, true);
  const std::vector<int> dd{1, 1};
  const auto report = VerifyTheorem3(
      game, sig, testing::Repeat(MixedProfile::Pure(game.action_counts(), dd), 3),
      0.9, ExactPrivacyCurve(sig));
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.deviations.empty());
}

TEST(Theorem3, ViolationYieldsProfitableDeviation) {
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::DefectionAlarm(game.outcomes(), 0.3, 0.32);
  const auto automaton = testing::GrimTriggerPublic(2, 0);
  VerifyOptions claimed;
  claimed.slack = SlackMode::kClaimed;
  const double delta = 0.5;
  const auto report = VerifyTheorem3(game, sig, automaton, delta,
                                     ExactPrivacyCurve(sig), claimed);
  ASSERT_FALSE(report.passed());
  ASSERT_EQ(report.deviations.size(), 1u);
  const auto& d = report.deviations[0];
  EXPECT_EQ(d.state, 0);
  EXPECT_EQ(d.action, 1);
  EXPECT_TRUE(d.history.empty());
  EXPECT_TRUE(d.profitable());
  EXPECT_NEAR(d.realized_gain, d.predicted_gain, 1e-12);
  EXPECT_GE(d.realized_gain, d.guaranteed_gain - 1e-12);
  EXPECT_GT(d.guaranteed_gain, 0.0);
}

TEST(Theorem3, DeviationAfterHistoryDiscountsByPath) {
  // Cooperate for one period, then repeat a cooperative state that the
  // prescribed play reaches only through signal "low".
  const auto game = testing::PrisonersDilemma();
  const auto sig = testing::DefectionAlarm(game.outcomes(), 0.25, 0.3);
  PublicStrategyAutomaton a;
  const std::vector<double> c{1.0, 0.0};
  const std::vector<double> d{0.0, 1.0};
  a.decision = {{c, c}, {c, c}, {d, d}};
  a.transition = {{2, 1}, {1, 1}, {2, 2}};
  const double delta = 0.6;
  const std::vector<int> history{1};
  const auto values = SolveValuesPublic(game, sig, a, delta);
  const double one_shot = OneShotGainAt(game, sig, a, values, 0, 1, 1);
  EXPECT_NEAR(SingleHistoryDeviationGain(game, sig, a, delta, history, 0, 1),
              delta * 0.25 * one_shot, 1e-12);
}

TEST(Report, JsonAndCsvShape) {
  const UnreachableFixture f;
  const auto report =
      VerifyTheorem3(f.game, f.sig, f.automaton, 0.1, ExactPrivacyCurve(f.sig),
                     {"fixture", SlackMode::kMeasured});
  const auto doc = ToJson(report);
  for (const char* key : {"instance", "delta", "eta", "xi", "per_state", "verdict",
                          "slack_mode", "adjusted_bound"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["per_state"][0]["state"], "w0");
  const auto csv = ToCsv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "instance,theorem,state,player,regret,bound,pass,probability,eta,xi,"
            "delta");
}

}  // namespace
}  // namespace dprepeat
