// Copyright 2026 The Coinvest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coinvest/pipeline.h"

#include <cmath>
#include <sstream>

#include "coinvest/characteristic_function.h"
#include "coinvest/records_csv.h"
#include "coinvest/scenarios.h"
#include "coinvest/shapley.h"

namespace coinvest {
namespace {

using nlohmann::ordered_json;

bool Close(double a, double b, double relative, double scale) {
  return std::abs(a - b) <= relative * std::max(1.0, std::abs(scale));
}

std::vector<ServiceProvider> CustomProviders(const RunConfig& config) {
  std::vector<ServiceProvider> sps;
  for (const CustomSp& c : config.custom_sps) {
    LoadProfile load = c.daily_load
                           ? ScaleToDailyTotal(SynthLoad(config.load_shape),
                                               *c.daily_load)
                           : LoadProfile(c.loads);
    sps.push_back({c.id, c.beta, std::move(load)});
  }
  return sps;
}

ordered_json CoalitionJson(const std::optional<Coalition>& coalition) {
  if (!coalition) return nullptr;
  return coalition->Members();
}

ordered_json CoreJson(const CoreCheck& core) {
  return {{"in_core", core.in_core},
          {"efficient", core.efficient},
          {"violating_coalition", CoalitionJson(core.violating_coalition)},
          {"min_slack", core.min_slack},
          {"tightest_coalition", core.tightest_coalition.Members()}};
}

ordered_json SupermodularityJson(const SupermodularityReport& report) {
  ordered_json out = {{"holds", report.holds},
                      {"comparisons", report.comparisons},
                      {"counterexample", nullptr}};
  if (report.counterexample) {
    const SupermodularityCounterexample& c = *report.counterexample;
    out["counterexample"] = {{"player", c.player},
                             {"T", c.smaller.Members()},
                             {"S", c.larger.Members()},
                             {"marginal_T", c.smaller_marginal},
                             {"marginal_S", c.larger_marginal}};
  }
  return out;
}

std::string Label(const SweepPoint& p) {
  std::ostringstream out;
  out << p.scenario << " " << p.sweep_param << "=" << p.sweep_value;
  return out.str();
}

}  // namespace

std::vector<SweepPoint> BuildSweepPoints(const RunConfig& config) {
  config.Validate();
  std::vector<SweepPoint> points;
  switch (config.scenario) {
    case ScenarioKind::kSameType:
      for (double l : config.same_type_l_total) {
        points.push_back({config.name, "l_total", l,
                          ScenarioSameType(l, config.market, config.load_shape)});
      }
      break;
    case ScenarioKind::kOmega:
      for (double w : config.omega_values) {
        points.push_back({config.name, "omega", w,
                          ScenarioOmega(w, config.omega_l_total, config.market,
                                        config.load_shape)});
      }
      break;
    case ScenarioKind::kPriceSweep:
      for (int n : config.price_num_sps) {
        std::vector<GameInstance> games = ScenarioPriceSweep(
            n, config.price_values, n * config.price_per_sp_load, config.market,
            config.load_shape);
        for (std::size_t k = 0; k < games.size(); ++k) {
          points.push_back({config.name + "-N" + std::to_string(n), "d",
                            config.price_values[k], std::move(games[k])});
        }
      }
      break;
    case ScenarioKind::kCustom:
      points.push_back({config.name, "none", 0.0,
                        GameInstance(config.market, CustomProviders(config))});
      break;
  }
  return points;
}

bool RunResult::AllChecksPass() const {
  for (const InstanceChecks& c : checks) {
    if (c.core_checked && !c.core.in_core) return false;
    if (c.supermodularity_checked && !c.supermodularity.holds) return false;
  }
  for (const FixtureChecks& f : fixtures) {
    if (!f.core.in_core || !f.supermodularity.holds) return false;
  }
  return true;
}

RunResult ExecuteRun(const RunConfig& config) {
  const std::vector<SweepPoint> points = BuildSweepPoints(config);
  RunResult result;
  result.clamped_slots = CountClampedSlots(config.load_shape);
  result.records = RunSweep(points, {.method = config.method,
                                     .samples = config.samples,
                                     .seed = config.seed});

  for (std::size_t i = 0; i < points.size(); ++i) {
    const CoinvestmentGame game(points[i].game);
    InstanceChecks checks;
    if (game.num_players() <= kMaxEnumerationPlayers) {
      std::vector<double> payoffs;
      for (const PlayerRow& row : result.records[i].players) {
        payoffs.push_back(row.shapley);
      }
      checks.core_checked = true;
      checks.classes = ClassifyPlayers(game);
      checks.core = CheckCore(game, payoffs);
    }
    if (game.num_players() <= kMaxSupermodularityPlayers) {
      checks.supermodularity_checked = true;
      checks.supermodularity = CheckSupermodularity(game);
    }
    result.checks.push_back(std::move(checks));
  }

  for (const FixtureGame& f : config.fixtures) {
    const TabularGame game(f.players, f.values);
    FixtureChecks checks;
    checks.name = f.name;
    checks.shapley = ShapleyEnumeration(game).payoffs;
    checks.core = CheckCore(game, checks.shapley);
    checks.supermodularity = CheckSupermodularity(game);
    result.fixtures.push_back(std::move(checks));
  }
  return result;
}

ordered_json SummaryJson(const RunResult& result) {
  ordered_json instances = ordered_json::array();
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const SweepRecord& r = result.records[i];
    const InstanceChecks& c = result.checks[i];
    ordered_json players = ordered_json::array();
    for (std::size_t p = 0; p < r.players.size(); ++p) {
      const PlayerRow& row = r.players[p];
      ordered_json entry = {{"id", row.player_id},
                            {"h_star", row.h_star},
                            {"shapley", row.shapley},
                            {"revenue", row.r_hat},
                            {"payment", row.payment},
                            {"payoff", row.payoff}};
      if (c.core_checked) {
        entry["veto"] = c.classes[p].veto;
        entry["null"] = c.classes[p].null;
      }
      players.push_back(std::move(entry));
    }
    ordered_json instance = {{"index", i},
                             {"scenario", r.scenario},
                             {"sweep_param", r.sweep_param},
                             {"sweep_value", r.sweep_value},
                             {"d", r.price_per_millicore},
                             {"v_grand", r.grand_value},
                             {"C_star", r.capacity},
                             {"players", players}};
    instance["core"] = c.core_checked ? CoreJson(c.core) : ordered_json(nullptr);
    instance["supermodularity"] = c.supermodularity_checked
                                      ? SupermodularityJson(c.supermodularity)
                                      : ordered_json(nullptr);
    instances.push_back(std::move(instance));
  }
  ordered_json fixtures = ordered_json::array();
  for (const FixtureChecks& f : result.fixtures) {
    fixtures.push_back({{"name", f.name},
                        {"shapley", f.shapley},
                        {"core", CoreJson(f.core)},
                        {"supermodularity", SupermodularityJson(f.supermodularity)}});
  }
  return {{"all_checks_passed", result.AllChecksPass()},
          {"instances", instances},
          {"fixtures", fixtures}};
}

ordered_json MetaJson(const RunConfig& config, const RunResult& result) {
  return {{"tool", "coinvest"},
          {"version", kToolVersion},
          {"seed", config.seed},
          {"load_shape_clamped_slots", result.clamped_slots},
          {"instances", result.records.size()},
          {"config", ConfigToJson(config)}};
}

void WriteRunOutputs(const RunConfig& config, const RunResult& result,
                     const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream csv;
  WriteRecordsCsv(csv, result.records);
  WriteFileAtomically(dir / "records.csv", csv.str());
  WriteFileAtomically(dir / "summary.json", SummaryJson(result).dump(2) + "\n");
  WriteFileAtomically(dir / "meta.json",
                      MetaJson(config, result).dump(2) + "\n");
}

std::vector<PropertyOutcome> VerifyConfig(const RunConfig& config) {
  const std::vector<SweepPoint> points = BuildSweepPoints(config);
  PropertyOutcome supermodular{"supermodularity", true, ""};
  PropertyOutcome core{"core-membership", true, ""};
  PropertyOutcome triangle{"oracle-triangle", true, ""};
  PropertyOutcome split{"equal-split", true, ""};
  PropertyOutcome balance{"settlement-balance", true, ""};
  auto fail = [](PropertyOutcome& p, const std::string& why) {
    if (p.passed) p.detail = why;
    p.passed = false;
  };

  int supermodular_count = 0;
  int enumerated_count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const CoinvestmentGame game(points[i].game);
    const int n = game.num_players();
    const int owner = game.game().owner();
    const double v = game.Value(game.game().GrandCoalition());
    const ShapleyResult closed = ShapleyClosedForm(game);

    if (n <= kMaxSupermodularityPlayers) {
      ++supermodular_count;
      if (!CheckSupermodularity(game).holds) fail(supermodular, Label(points[i]));
    }
    if (n <= kMaxEnumerationPlayers) {
      ++enumerated_count;
      if (!CheckCore(game, closed.payoffs).in_core) fail(core, Label(points[i]));
      const ShapleyResult exact = ShapleyEnumeration(game);
      const ShapleyResult sampled =
          ShapleySampling(game, config.samples, config.seed + i);
      for (int p = 0; p < n; ++p) {
        if (!Close(exact.payoffs[p], closed.payoffs[p], 1e-9, v)) {
          fail(triangle, Label(points[i]) + ": enumeration != closed form");
        }
        const double bound =
            3.0 * sampled.standard_errors[p] + 1e-9 * std::max(1.0, std::abs(v));
        if (std::abs(sampled.payoffs[p] - exact.payoffs[p]) > bound) {
          fail(triangle, Label(points[i]) + ": sampling outside 3 SE");
        }
      }
    }
    double sp_total = 0.0;
    for (int p = 0; p < game.game().num_sps(); ++p) sp_total += closed.payoffs[p];
    if (!Close(closed.payoffs[owner], 0.5 * v, 1e-9, v) ||
        !Close(sp_total, 0.5 * v, 1e-9, v)) {
      fail(split, Label(points[i]));
    }
  }

  const std::vector<SweepRecord> records =
      RunSweep(points, {.method = ShapleyMethod::kClosedForm});
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::vector<std::string> problems = CheckRecordConsistency(records[i]);
    if (!problems.empty()) fail(balance, Label(points[i]) + ": " + problems[0]);
  }

  const std::string all = std::to_string(points.size()) + " instances";
  if (supermodular.passed) supermodular.detail = std::to_string(supermodular_count) + " instances";
  if (core.passed) core.detail = std::to_string(enumerated_count) + " instances";
  if (triangle.passed) triangle.detail = std::to_string(enumerated_count) + " instances";
  if (split.passed) split.detail = all;
  if (balance.passed) balance.detail = all;

  std::vector<PropertyOutcome> outcomes = {supermodular, core, triangle, split,
                                           balance};
  for (const FixtureGame& f : config.fixtures) {
    const TabularGame game(f.players, f.values);
    const SupermodularityReport report = CheckSupermodularity(game);
    outcomes.push_back({"fixture " + f.name + " supermodularity", report.holds,
                        report.holds ? "" : "counterexample found"});
    const CoreCheck check = CheckCore(game, ShapleyEnumeration(game).payoffs);
    outcomes.push_back({"fixture " + f.name + " core-membership", check.in_core,
                        check.in_core ? "" : "Shapley value outside the core"});
  }
  return outcomes;
}

}  // namespace coinvest
