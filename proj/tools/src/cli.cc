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


#include "dprepeat_cli/cli.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "dprepeat/errors.h"
#include "dprepeat/families/builders.h"
#include "dprepeat/families/collapse.h"
#include "dprepeat/families/scan.h"
#include "dprepeat/families/sensitivity.h"
#include "dprepeat/format.h"
#include "dprepeat/game/game_json.h"
#include "dprepeat/privacy/finite_dp.h"
#include "dprepeat/rational.h"
#include "dprepeat/repeated/private_verifiers.h"
#include "dprepeat/repeated/public_verifiers.h"

namespace dprepeat::cli {
namespace {

using nlohmann::json;

constexpr double kRateBandLimit = 1.5;

[[noreturn]] void InputFail(const std::string& what) { Fail(ErrorKind::kParse, what); }

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string MinimizerLine(const CurveMinimizer& m) {
  return "eps_star=" + FormatDouble(m.eps) +
         " gamma_star=" + FormatDouble(m.gamma) +
         " eps_plus_gamma=" + FormatDouble(m.sum()) + "\n";
}

json MinimizerJson(const CurveMinimizer& m) {
  return {{"eps_star", m.eps},
          {"gamma_star", m.gamma},
          {"eps_plus_gamma", m.sum()}};
}

GameInstance LoadGameAndSignals(const RunConfig& config) {
  if (config.game_path.empty()) InputFail("--game is required");
  GameInstance inst = LoadInstance(config.game_path);
  if (!config.signals_path.empty()) {
    inst.signals =
        SignalsFromJson(ReadJsonFile(config.signals_path), inst.game.outcomes());
  }
  if (!inst.signals) InputFail("no signal structure in --game or --signals");
  return inst;
}

PrivacyCurve CurveFor(const RunConfig& config, const SignalStructure& signals,
                      const std::string& id) {
  return config.exact_rational
             ? RationalPrivacyCurve(signals, config.eps_grid, id)
             : ExactPrivacyCurve(signals, config.eps_grid, id);
}

FamilyInstance BuildFamilyMember(const RunConfig& config, int n) {
  DiscretizationOptions options;
  options.exact = false;
  options.eps_grid = config.eps_grid;
  if (config.family == "anonymous") {
    AnonymousSpec spec;
    spec.n = n;
    spec.k = config.k;
    if (config.noise_std) spec.noise_std = *config.noise_std;
    spec.discretization = options;
    return BuildAnonymousInstance(spec);
  }
  if (config.family == "cournot") {
    CournotSpec spec;
    spec.n = n;
    if (config.noise_std) spec.log_shock_std = *config.noise_std;
    return BuildCournotInstance(spec, options);
  }
  if (config.family == "counterfactual") {
    CounterfactualSpec spec;
    if (config.noise_std) spec.noise_std = *config.noise_std;
    if (!config.mu) {
      spec.base = PublicGoodsGame(n);
      spec.discretization = options;
      return BuildCounterfactualInstance(spec);
    }
    // Only the analytic curve depends on mu, so no base game is needed.
    Require(*config.mu >= 0.0 && *config.mu <= 1.0, "--mu must be in [0,1]");
    FamilyInstance inst;
    inst.family = "counterfactual";
    inst.n = n;
    inst.noise_std = spec.noise_std;
    inst.sensitivity = CounterfactualSensitivity(n, config.k, *config.mu);
    inst.analytic = GaussianPrivacyCurve(
        {config.k * n, inst.sensitivity, std::nullopt}, spec.noise_std,
        config.eps_grid, "counterfactual/n=" + std::to_string(n));
    inst.notes.push_back("analytic curve from --mu " +
                         FormatDouble(*config.mu));
    return inst;
  }
  InputFail("--family must be anonymous, cournot or counterfactual");
}

std::string EntryLabel(const RegretEntry& e) {
  return e.state + " (player " + std::to_string(e.player) + ", regret " +
         FormatDouble(e.regret) + " > bound " + FormatDouble(e.bound) + ")";
}

}  // namespace

void RunConfig::Validate() const {
  Require(delta >= 0.0 && delta < 1.0, "--delta must lie in [0, 1)");
  Require(horizon >= 1, "--horizon must be positive");
  Require(k >= 2, "--k must be at least 2");
  Require(format == "json" || format == "csv" ||
              (format == "text" && command == "demo-collapse"),
          "--format must be json or csv (text for demo-collapse)");
  if (noise_std) Require(*noise_std >= 0.0, "--noise-std must be nonnegative");
}

json CurveJson(const PrivacyCurve& curve) {
  return {{"id", curve.id},
          {"provenance", ProvenanceName(curve.provenance)},
          {"eps", curve.eps},
          {"gamma", curve.gamma},
          {"minimizer", MinimizerJson(curve.minimizer)}};
}

PrivacyCurve RationalPrivacyCurve(const SignalStructure& signals,
                                  const EpsGrid& grid, std::string id) {
  PrivacyCurve curve;
  curve.id = std::move(id);
  curve.provenance = CurveProvenance::kExactFinite;
  curve.eps = grid.Points();
  auto gamma_of = [&](double eps) {
    return ToDouble(
        FiniteDpGammaExact(signals, ToRational(std::exp(eps))).gamma);
  };
  for (double e : curve.eps) curve.gamma.push_back(gamma_of(e));
  curve.minimizer = MinimizeEpsPlusGamma(gamma_of, curve.eps);
  return curve;
}

CommandResult AnalyzeSignals(const RunConfig& config) {
  PrivacyCurve curve;
  json doc = {{"command", "analyze-signals"}, {"seed", config.seed}};
  if (!config.family.empty()) {
    if (config.n_list.size() != 1) InputFail("--n-list needs exactly one n");
    const FamilyInstance inst = BuildFamilyMember(config, config.n_list[0]);
    curve = inst.analytic;
    doc["family"] = inst.family;
    doc["n"] = inst.n;
    doc["sensitivity"] = inst.sensitivity;
    doc["noise_std"] = inst.noise_std;
    doc["notes"] = inst.notes;
  } else {
    const GameInstance inst = LoadGameAndSignals(config);
    curve = CurveFor(config, *inst.signals, "signals");
    doc["kind"] = inst.signals->is_public() ? "public" : "private";
    doc["rational"] = config.exact_rational;
  }
  doc["curve"] = CurveJson(curve);
  doc["minimizer"] = MinimizerJson(curve.minimizer);

  CommandResult result;
  result.artifact = config.format == "csv" ? CurveCsv(curve) : Dump(doc);
  result.summary = MinimizerLine(curve.minimizer);
  return result;
}

CommandResult Verify(const RunConfig& config) {
  if (config.theorem < 1 || config.theorem > 4) {
    InputFail("--theorem must be 1, 2, 3 or 4");
  }
  if (config.strategy_path.empty()) InputFail("--strategy is required");
  const GameInstance inst = LoadGameAndSignals(config);
  const StrategyDocument strategy =
      StrategyFromJson(ReadJsonFile(config.strategy_path));
  const SignalStructure& signals = *inst.signals;

  const bool wants_public = config.theorem != 4;
  if (wants_public != signals.is_public()) {
    Fail(ErrorKind::kIncompatible,
         "--theorem " + std::to_string(config.theorem) + " needs " +
             (wants_public ? "public" : "private") + " monitoring");
  }
  if ((config.theorem == 1 || config.theorem == 3) && !strategy.is_public) {
    Fail(ErrorKind::kIncompatible,
         "--theorem 1 and 3 need a public strategy automaton");
  }

  VerifyOptions options;
  options.instance = config.game_path;
  options.slack = ParseSlackMode(config.slack);
  const PrivacyCurve curve = CurveFor(config, signals, "signals");
  const StrategyProfile profile = strategy.is_public
                                      ? ToStrategyProfile(strategy.shared)
                                      : strategy.per_player;
  RegretReport report;
  switch (config.theorem) {
    case 1:
      report = VerifyTheorem1(inst.game, signals, strategy.shared,
                              config.delta, curve, options);
      break;
    case 2:
      report = VerifyTheorem2(inst.game, signals, profile, config.delta, curve,
                              config.horizon, options);
      break;
    case 3:
      report = VerifyTheorem3(inst.game, signals, strategy.shared,
                              config.delta, curve, options);
      break;
    default:
      report = VerifyTheorem4(inst.game, signals, profile, config.delta, curve,
                              config.horizon, options);
      break;
  }

  CommandResult result;
  result.exit_code = report.passed() ? kExitPass : kExitViolation;
  if (config.format == "csv") {
    result.artifact = ToCsv(report);
  } else {
    json doc = ToJson(report);
    doc["seed"] = config.seed;
    result.artifact = Dump(doc);
  }
  std::ostringstream summary;
  summary << "--theorem " << config.theorem << ": "
          << (report.passed() ? "pass" : "violation") << ", "
          << report.violations() << " of " << report.per_state.size()
          << " entries over bound " << FormatDouble(report.adjusted_bound())
          << "\n";
  for (const RegretEntry& e : report.per_state) {
    if (!e.pass) summary << "  violating state " << EntryLabel(e) << "\n";
  }
  for (const HistoryDeviation& d : report.deviations) {
    summary << "  deviation at state " << d.state << ": player " << d.player
            << " plays " << d.action << " once, gain "
            << FormatDouble(d.realized_gain) << "\n";
  }
  result.summary = summary.str();
  return result;
}

CommandResult ScanNCommand(const RunConfig& config) {
  if (config.family.empty()) InputFail("--family is required");
  if (config.n_list.empty()) InputFail("--n-list is required");
  const ScanResult scan = ScanN(
      [&](int n) { return BuildFamilyMember(config, n); }, config.n_list,
      config.delta);
  const bool band_ok =
      !std::isnan(scan.rate_band) && scan.rate_band <= kRateBandLimit;

  CommandResult result;
  result.exit_code = scan.monotone ? kExitPass : kExitViolation;
  if (config.format == "csv") {
    result.artifact = ScanCsv(scan);
  } else {
    json rows = json::array();
    for (const ScanRow& r : scan.rows) {
      rows.push_back({{"n", r.n},
                      {"sensitivity", r.sensitivity},
                      {"eps_star", r.eps_star},
                      {"gamma_star", r.gamma_star},
                      {"eps_plus_gamma", r.eps_plus_gamma},
                      {"eta_at_delta", r.eta},
                      {"normalized_rate", r.normalized_rate},
                      {"monotone", r.monotone}});
    }
    json doc = {{"command", "scan-n"},
                {"family", config.family},
                {"seed", config.seed},
                {"delta", scan.delta},
                {"monotone", scan.monotone},
                {"rate_band", std::isnan(scan.rate_band)
                                  ? json(nullptr)
                                  : json(scan.rate_band)},
                {"rate_band_limit", kRateBandLimit},
                {"rate_band_ok", band_ok},
                {"rows", rows}};
    result.artifact = Dump(doc);
  }
  result.summary = std::string("eta ") +
                   (scan.monotone ? "nonincreasing" : "increases") +
                   " over n; rate band " + FormatDouble(scan.rate_band) +
                   (band_ok ? " within " : " outside ") +
                   FormatDouble(kRateBandLimit) + "\n";
  return result;
}

CommandResult DemoCollapse(const RunConfig& config) {
  CollapseSpec spec;
  spec.delta = config.delta;
  if (config.noise_std) spec.noise_std = *config.noise_std;
  spec.n_min = config.n_min;
  spec.n_max = config.n_max;
  spec.eps_grid = config.eps_grid;
  const CollapseResult demo = RunCollapseDemo(spec);

  std::ostringstream text;
  text << "Grim trigger in the public-goods game, delta "
       << FormatDouble(spec.delta) << ", noise_std "
       << FormatDouble(spec.noise_std) << ".\n";
  text << "Stage cooperation gap: " << FormatDouble(demo.stage_gap) << ".\n";
  if (demo.collapse_n) {
    text << "Cooperation stops being supportable at n = " << *demo.collapse_n;
    if (demo.perfect_certified) {
      text << ": a single defection is too hard to detect";
    }
    text << ".\n";
  } else {
    text << "Cooperation stays supportable on the whole grid up to n = "
         << spec.n_max << ".\n";
  }
  if (demo.eta_below_gap_n) {
    text << "The anti-folk bound drops below the cooperation gap at n = "
         << *demo.eta_below_gap_n << ".\n";
  } else {
    text << "The anti-folk bound never drops below the cooperation gap.\n";
  }
  text << "Under perfect monitoring the same automaton "
       << (demo.perfect_certified ? "is" : "is not")
       << " a perfect public equilibrium at every n.\n";
  if (!demo.note.empty()) text << "Note: " << demo.note << "\n";

  CommandResult result;
  result.summary = text.str();
  if (config.format == "text") {
    result.artifact = text.str();
    result.summary.clear();
  } else if (config.format == "csv") {
    std::string csv =
        "n,p_low_comply,p_low_deviate,xi,supported,eta_analytic,eta_exact,"
        "xi_perfect\n";
    for (const CollapseRow& r : demo.rows) {
      csv += std::to_string(r.n) + "," + FormatDouble(r.p_low_comply) + "," +
             FormatDouble(r.p_low_deviate) + "," + FormatDouble(r.xi) + "," +
             (r.supported ? "1" : "0") + "," + FormatDouble(r.eta_analytic) +
             "," + FormatDouble(r.eta_exact) + "," +
             FormatDouble(r.xi_perfect) + "\n";
    }
    result.artifact = csv;
  } else {
    json rows = json::array();
    for (const CollapseRow& r : demo.rows) {
      rows.push_back({{"n", r.n},
                      {"p_low_comply", r.p_low_comply},
                      {"p_low_deviate", r.p_low_deviate},
                      {"xi", r.xi},
                      {"supported", r.supported},
                      {"eta_analytic", FormatDouble(r.eta_analytic)},
                      {"eta_exact", r.eta_exact},
                      {"xi_perfect", r.xi_perfect}});
    }
    auto opt = [](const std::optional<int>& v) {
      return v ? json(*v) : json(nullptr);
    };
    json doc = {{"command", "demo-collapse"},
                {"seed", config.seed},
                {"delta", spec.delta},
                {"noise_std", spec.noise_std},
                {"stage_gap", demo.stage_gap},
                {"collapse_n", opt(demo.collapse_n)},
                {"eta_below_gap_n", opt(demo.eta_below_gap_n)},
                {"perfect_certified", demo.perfect_certified},
                {"note", demo.note},
                {"narrative", text.str()},
                {"rows", rows}};
    result.artifact = Dump(doc);
  }
  return result;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  std::string eps_grid;
  std::string n_list;
  double noise_std = 0.0;
  double mu = 0.0;

  CLI::App app{"Privacy and anti-folk bound verification for repeated games",
               "dprepeat"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--delta", config.delta, "Discount factor in [0, 1)");
    sub->add_option("--seed", config.seed, "Master seed, recorded in output");
    sub->add_option("--format", config.format, "json, csv or text");
    sub->add_option("--out", config.out_path, "Write the artifact here");
    sub->add_option("--eps-grid", eps_grid, "lo:hi:count log grid for eps");
  };
  auto family = [&](CLI::App* sub) {
    sub->add_option("--family", config.family,
                    "anonymous, cournot or counterfactual");
    sub->add_option("--n-list", n_list, "Comma-separated player counts");
    sub->add_option("--noise-std", noise_std, "Gaussian noise scale");
    sub->add_option("--k", config.k, "Actions per player");
    sub->add_option("--mu", mu, "Counterfactual payoff sensitivity override");
  };

  CLI::App* analyze =
      app.add_subcommand("analyze-signals", "Privacy curve of a structure");
  common(analyze);
  family(analyze);
  analyze->add_option("--game", config.game_path, "Game JSON");
  analyze->add_option("--signals", config.signals_path, "Signals JSON");
  analyze->add_flag("--exact-rational", config.exact_rational,
                    "Exact rational gamma");

  CLI::App* verify = app.add_subcommand("verify", "Check a regret bound");
  common(verify);
  verify->add_option("--game", config.game_path, "Game JSON")->required();
  verify->add_option("--signals", config.signals_path, "Signals JSON");
  verify->add_option("--strategy", config.strategy_path, "Strategy JSON")
      ->required();
  verify->add_option("--theorem", config.theorem, "1, 2, 3 or 4")->required();
  verify->add_option("--horizon", config.horizon, "History length");
  verify->add_option("--slack", config.slack, "measured or claimed");
  verify->add_flag("--exact-rational", config.exact_rational,
                   "Exact rational gamma");

  CLI::App* scan = app.add_subcommand("scan-n", "Sweep a family over n");
  common(scan);
  family(scan);

  CLI::App* collapse =
      app.add_subcommand("demo-collapse", "Where cooperation collapses");
  common(collapse);
  collapse->add_option("--noise-std", noise_std, "Gaussian noise scale");
  collapse->add_option("--n-min", config.n_min, "Smallest n on the grid");
  collapse->add_option("--n-max", config.n_max, "Largest n on the grid");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitParse;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) config.command = sub->get_name();
    if (config.command == "demo-collapse" &&
        collapse->get_option("--format")->count() == 0) {
      config.format = "text";
    }
    if (!eps_grid.empty()) config.eps_grid = EpsGrid::Parse(eps_grid);
    if (!n_list.empty()) {
      std::stringstream in(n_list);
      std::string item;
      while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const int n = std::stoi(item, &used);
        if (used != item.size()) InputFail("bad --n-list entry " + item);
        config.n_list.push_back(n);
      }
    }
    for (CLI::App* sub : {analyze, scan, collapse}) {
      if (sub->parsed() && sub->get_option("--noise-std")->count() > 0) {
        config.noise_std = noise_std;
      }
      if (sub->parsed() && sub != collapse &&
          sub->get_option("--mu")->count() > 0) {
        config.mu = mu;
      }
    }
    config.Validate();

    CommandResult result;
    if (config.command == "analyze-signals") {
      result = AnalyzeSignals(config);
    } else if (config.command == "verify") {
      result = Verify(config);
    } else if (config.command == "scan-n") {
      result = ScanNCommand(config);
    } else {
      result = DemoCollapse(config);
    }

    if (config.out_path.empty()) {
      out << result.artifact;
      err << result.summary;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) InputFail("cannot write " + config.out_path);
      file << result.artifact;
      out << result.summary;
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kGuard:
        return kExitGuard;
      case ErrorKind::kIncompatible:
      case ErrorKind::kZeroProbability:
        return kExitIncompatible;
      default:
        return kExitParse;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::logic_error& e) {  // stoi failures
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace dprepeat::cli
