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


#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "dprepeat/families/builders.h"
#include "dprepeat/families/collapse.h"
#include "dprepeat/privacy/finite_dp.h"
#include "dprepeat/privacy/privacy_curve.h"
#include "dprepeat/repeated/history.h"
#include "dprepeat/repeated/public_verifiers.h"

namespace dprepeat {
namespace {

std::vector<double> Simplex(std::mt19937_64& rng, int size) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> p(size);
  double total = 0.0;
  for (double& x : p) total += x = draw(rng);
  for (double& x : p) x /= total;
  return p;
}

SignalStructure PublicStructure(std::mt19937_64& rng,
                                const OutcomeSpace& outcomes, int signals) {
  std::vector<std::vector<double>> table;
  for (std::int64_t o = 0; o < outcomes.size(); ++o) {
    table.push_back(Simplex(rng, signals));
  }
  std::vector<std::string> labels;
  for (int s = 0; s < signals; ++s) labels.push_back(std::to_string(s));
  return SignalStructure(outcomes, SignalStructure::Kind::kPublic, labels,
                         std::move(table));
}

StageGame RandomGame(std::mt19937_64& rng, std::vector<int> counts) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return StageGame::Explicit(std::move(counts),
                             [&](int, std::span<const int>) { return u(rng); });
}

// Positive-part gamma over all neighbor pairs; range(0) signals, range(1)
// players with three actions each.
void BM_FiniteDpGamma(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto outcomes = OutcomeSpace::Profiles(
      std::vector<int>(static_cast<std::size_t>(state.range(1)), 3));
  const auto sig = PublicStructure(rng, outcomes, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FiniteDpGamma(sig, 0.1));
}
BENCHMARK(BM_FiniteDpGamma)->ArgsProduct({{4, 16, 64, 256}, {2, 3}});

void BM_FiniteDpGammaExact(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto sig = PublicStructure(rng, OutcomeSpace::Profiles({3, 3}),
                                   state.range(0));
  const Rational ratio = ToRational(1.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FiniteDpGammaExact(sig, ratio));
  }
}
BENCHMARK(BM_FiniteDpGammaExact)->Arg(4)->Arg(16)->Arg(64);

void BM_ExactCurve(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto sig = PublicStructure(rng, OutcomeSpace::Profiles({3, 3}), 16);
  EpsGrid grid;
  grid.count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ExactPrivacyCurve(sig, grid));
}
BENCHMARK(BM_ExactCurve)->Arg(16)->Arg(64)->Arg(256);

// Anonymous histogram structures grow with n; this covers composition
// ranking and the Gaussian discretization.
void BM_AnonymousInstance(benchmark::State& state) {
  AnonymousSpec spec;
  spec.n = static_cast<int>(state.range(0));
  spec.noise_std = 1.0;
  spec.discretization.grid_width = 0.25;
  for (auto _ : state) benchmark::DoNotOptimize(BuildAnonymousInstance(spec));
}
BENCHMARK(BM_AnonymousInstance)->Arg(4)->Arg(16)->Arg(64)
    ->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem1(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const std::vector<int> counts{3, 3};
  const auto game = RandomGame(rng, counts);
  const auto sig = PublicStructure(rng, game.outcomes(), 4);
  const int states = static_cast<int>(state.range(0));
  PublicStrategyAutomaton automaton;
  std::uniform_int_distribution<int> next(0, states - 1);
  for (int w = 0; w < states; ++w) {
    automaton.decision.push_back({Simplex(rng, 3), Simplex(rng, 3)});
    std::vector<int> row;
    for (int s = 0; s < 4; ++s) row.push_back(next(rng));
    automaton.transition.push_back(row);
  }
  const auto curve = ExactPrivacyCurve(sig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        VerifyTheorem1(game, sig, automaton, 0.9, curve));
  }
}
BENCHMARK(BM_VerifyTheorem1)->Arg(2)->Arg(8)->Arg(32);

// Forward filter over joint automaton states at growing horizons.
void BM_TrackBeliefs(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const std::vector<int> counts{2, 2};
  const auto game = RandomGame(rng, counts);
  std::vector<std::vector<double>> table;
  for (int o = 0; o < 4; ++o) table.push_back(Simplex(rng, 4));
  const SignalStructure sig(game.outcomes(), SignalStructure::Kind::kPrivate,
                            {"0", "1"}, std::move(table));
  StrategyProfile strategies;
  for (int i = 0; i < 2; ++i) {
    PlayerAutomaton p;
    p.decision = {Simplex(rng, 2), Simplex(rng, 2)};
    p.transition = {{{0, 1}, {1, 0}}, {{1, 1}, {0, 1}}};
    strategies.players.push_back(p);
  }
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        TrackBeliefs<double>(game, sig, strategies, horizon));
  }
}
BENCHMARK(BM_TrackBeliefs)->DenseRange(2, 6, 2);

void BM_CollapseDemo(benchmark::State& state) {
  CollapseSpec spec;
  spec.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RunCollapseDemo(spec));
}
BENCHMARK(BM_CollapseDemo)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dprepeat

BENCHMARK_MAIN();
