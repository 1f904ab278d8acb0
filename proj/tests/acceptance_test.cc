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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coinvest/allocation.h"
#include "coinvest/characteristic_function.h"
#include "coinvest/config.h"
#include "coinvest/pipeline.h"
#include "coinvest/presets.h"
#include "coinvest/shapley.h"
#include "coinvest/stability.h"
#include "coinvest/sweep.h"
#include "random_games.h"

namespace coinvest {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool passed = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

bool RelClose(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

std::vector<GameInstance> RandomGames(std::uint64_t seed, int count, int min_sps,
                                      int max_sps) {
  std::mt19937_64 rng(seed);
  std::vector<GameInstance> games;
  for (int i = 0; i < count; ++i) games.push_back(testing::RandomGame(rng, min_sps, max_sps));
  return games;
}

std::vector<SweepRecord> RunPreset(const std::string& name) {
  const RunConfig config = ParseConfig(FindPreset(name)->config_json);
  return RunSweep(BuildSweepPoints(config));
}

const std::vector<GameInstance>& TriangleGames() {
  static const std::vector<GameInstance> games = RandomGames(2024, 200, 1, 7);
  return games;
}

// 1. phi_NO = v(N)/2 and sum of SP payoffs = v(N)/2, both exact methods.
Outcome EqualSplit() {
  Outcome out;
  for (std::size_t k = 0; k < TriangleGames().size(); ++k) {
    const CoinvestmentGame game(TriangleGames()[k]);
    const double half = 0.5 * game.Value(game.game().GrandCoalition());
    for (const ShapleyResult& r : {ShapleyEnumeration(game), ShapleyClosedForm(game)}) {
      double sps = 0.0;
      for (int i = 0; i < game.game().num_sps(); ++i) sps += r.payoffs[i];
      if (!RelClose(r.payoffs[game.game().owner()], half, 1e-9) ||
          !RelClose(sps, half, 1e-9)) {
        out.Fail("instance " + std::to_string(k) + " (" +
                 std::string(ShapleyMethodName(r.method)) + ")");
      }
    }
  }
  out.detail = out.passed ? "200 instances, N in 1..7, rel 1e-9" : out.detail;
  return out;
}

// 2. Enumeration = closed form (rel 1e-9), sampling within 3 standard errors.
Outcome OracleTriangle() {
  Outcome out;
  double worst_rel = 0.0;
  double worst_ratio = 0.0;
  for (std::size_t k = 0; k < TriangleGames().size(); ++k) {
    const CoinvestmentGame game(TriangleGames()[k]);
    const double v = game.Value(game.game().GrandCoalition());
    const ShapleyResult exact = ShapleyEnumeration(game);
    const ShapleyResult closed = ShapleyClosedForm(game);
    const ShapleyResult sampled = ShapleySampling(game, 100000, 7000 + k);
    for (int i = 0; i < game.num_players(); ++i) {
      const double scale = std::max(std::abs(closed.payoffs[i]), 1e-300);
      worst_rel = std::max(worst_rel, std::abs(exact.payoffs[i] - closed.payoffs[i]) / scale);
      if (!RelClose(exact.payoffs[i], closed.payoffs[i], 1e-9)) {
        out.Fail("instance " + std::to_string(k) + " player " + std::to_string(i) +
                 ": enumeration != closed form");
      }
      const double error = std::abs(sampled.payoffs[i] - exact.payoffs[i]);
      const double bound = 3.0 * sampled.standard_errors[i] + 1e-9 * std::max(1.0, v);
      worst_ratio = std::max(worst_ratio, error / bound);
      if (error > bound) {
        out.Fail("instance " + std::to_string(k) + " player " + std::to_string(i) +
                 ": sampling outside 3 SE");
      }
    }
  }
  if (out.passed) {
    std::ostringstream d;
    d << "200 instances, 1e5 samples; max rel gap " << worst_rel
      << ", max error/bound " << worst_ratio;
    out.detail = d.str();
  }
  return out;
}

// 3. Supermodularity on 100 random games with N <= 4; fixture rejected.
Outcome Convexity() {
  Outcome out;
  long long comparisons = 0;
  for (const GameInstance& g : RandomGames(31, 100, 1, 4)) {
    const SupermodularityReport report = CheckSupermodularity(CoinvestmentGame(g));
    comparisons += report.comparisons;
    if (!report.holds) out.Fail("random game not supermodular");
  }
  //                       {}  {0} {1} {01} {2} {02} {12} {012}
  const TabularGame fixture(3, {0, 1, 0, 7, 0, 7, 0, 8});
  if (CheckSupermodularity(fixture).holds) out.Fail("non-convex fixture accepted");
  if (out.passed) {
    out.detail = "100 instances, " + std::to_string(comparisons) +
                 " (i,T,S) comparisons; fixture rejected";
  }
  return out;
}

// 4. Shapley payoffs in the core, 100 random games with N <= 7.
Outcome Core() {
  Outcome out;
  long long coalitions = 0;
  for (const GameInstance& g : RandomGames(41, 100, 1, 7)) {
    const CoinvestmentGame game(g);
    coalitions += std::int64_t{1} << game.num_players();
    const CoreCheck check = CheckCore(game, ShapleyClosedForm(game).payoffs, 1e-9);
    if (!check.in_core) out.Fail("Shapley payoff outside the core");
  }
  if (out.passed) {
    out.detail = "100 instances, " + std::to_string(coalitions) +
                 " coalitions, slack 1e-9";
  }
  return out;
}

// 5. Closed form vs grid search, and separable value vs joint brute force.
Outcome BruteForceAllocation() {
  Outcome out;
  std::mt19937_64 rng(51);
  for (int k = 0; k < 50; ++k) {
    const GameInstance g = testing::RandomGame(rng, 1, 1);
    const ServiceProvider& sp = g.sp(0);
    const SingleAllocation a = OptimalAllocationSingle(sp, g.market());
    const double upper = NumericBracketUpper(sp, g.market());
    const testing::GridMax grid =
        testing::GridMaximize(sp.beta, sp.load.DailyTotal(), g.market(), upper, 1000000);
    if (std::abs(grid.h - a.h_star) > grid.step) {
      out.Fail("single SP " + std::to_string(k) + ": h* off by more than one step");
    }
    if (std::abs(grid.value - a.value) > 1e-6 * std::abs(a.value)) {
      out.Fail("single SP " + std::to_string(k) + ": m off by more than 1e-6 rel");
    }
  }
  for (int k = 0; k < 10; ++k) {
    const GameInstance g = testing::RandomGame(rng, 2, 2);
    const double upper = std::max(NumericBracketUpper(g.sp(0), g.market()),
                                  NumericBracketUpper(g.sp(1), g.market()));
    double resolution = 0.0;
    const double joint = testing::JointGridValue(g, upper, 1000, &resolution);
    const double v = CoalitionValue(g, g.GrandCoalition());
    if (joint > v + 1e-9 * std::max(1.0, v) || joint < v - resolution) {
      out.Fail("two-SP instance " + std::to_string(k) + ": joint grid disagrees");
    }
  }
  if (out.passed) out.detail = "50 single-SP grids (1e6 steps), 10 joint 2-SP grids";
  return out;
}

// 6. Capacity strictly increasing and sublinear; value increasing, R^2 >= 0.99.
Outcome CapacityAndValueTrend() {
  Outcome out;
  const std::vector<SweepRecord> records = RunPreset("load-sweep");
  for (std::size_t k = 1; k < records.size(); ++k) {
    if (!(records[k].capacity > records[k - 1].capacity)) out.Fail("C* not strictly increasing");
    if (!(records[k].grand_value > records[k - 1].grand_value)) out.Fail("v not increasing");
  }
  int doublings = 0;
  for (const SweepRecord& a : records) {
    for (const SweepRecord& b : records) {
      if (b.sweep_value == 2 * a.sweep_value) {
        ++doublings;
        if (!(b.capacity < 2 * a.capacity)) out.Fail("C(2L) >= 2 C(L)");
      }
    }
  }
  double mx = 0, my = 0;
  for (const SweepRecord& r : records) { mx += r.sweep_value; my += r.grand_value; }
  mx /= records.size();
  my /= records.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (const SweepRecord& r : records) {
    sxy += (r.sweep_value - mx) * (r.grand_value - my);
    sxx += (r.sweep_value - mx) * (r.sweep_value - mx);
    syy += (r.grand_value - my) * (r.grand_value - my);
  }
  const double r2 = sxy * sxy / (sxx * syy);
  if (!(r2 >= 0.99)) out.Fail("R^2 = " + std::to_string(r2));
  if (doublings == 0) out.Fail("no doubling pairs in the grid");
  if (out.passed) {
    std::ostringstream d;
    d << records.size() << " points, " << doublings << " doublings, R^2 = " << r2;
    out.detail = d.str();
  }
  return out;
}

// 7. SP1 capacity share nonincreasing in omega, zero at omega = 1; owner gets
// half the value at every omega.
Outcome OmegaTrend() {
  Outcome out;
  RunConfig config = ParseConfig(FindPreset("omega-sweep")->config_json);
  config.omega_values.clear();
  for (int k = 0; k <= 10; ++k) config.omega_values.push_back(k == 10 ? 1.0 : 0.5 + 0.05 * k);
  const std::vector<SweepRecord> records = RunSweep(BuildSweepPoints(config));
  double previous = 2.0;
  for (const SweepRecord& r : records) {
    const double share = r.capacity > 0 ? r.players[0].h_star / r.capacity : 0.0;
    if (share > previous) out.Fail("SP1 share increases at omega=" + std::to_string(r.sweep_value));
    previous = share;
    if (!RelClose(r.players.back().shapley, 0.5 * r.grand_value, 1e-9)) {
      out.Fail("phi_NO != v/2 at omega=" + std::to_string(r.sweep_value));
    }
  }
  if (records.back().sweep_value != 1.0 || records.back().players[0].h_star != 0.0) {
    out.Fail("SP1 share not exactly zero at omega=1");
  }
  if (out.passed) out.detail = "11 omega points";
  return out;
}

// 8. C* and v nonincreasing in d for N in {2,4,7}; v nondecreasing in N.
Outcome PriceTrend() {
  Outcome out;
  const RunConfig config = ParseConfig(FindPreset("price-sweep")->config_json);
  const std::vector<SweepRecord> records = RunSweep(BuildSweepPoints(config));
  const std::size_t per_n = config.price_values.size();
  if (records.size() != per_n * config.price_num_sps.size()) out.Fail("unexpected record count");
  for (std::size_t g = 0; g < config.price_num_sps.size(); ++g) {
    for (std::size_t k = 1; k < per_n; ++k) {
      const SweepRecord& a = records[g * per_n + k - 1];
      const SweepRecord& b = records[g * per_n + k];
      if (b.capacity > a.capacity) out.Fail("C* increases with d, " + b.scenario);
      if (b.grand_value > a.grand_value) out.Fail("v increases with d, " + b.scenario);
    }
  }
  for (std::size_t g = 1; g < config.price_num_sps.size(); ++g) {
    for (std::size_t k = 0; k < per_n; ++k) {
      if (records[g * per_n + k].grand_value < records[(g - 1) * per_n + k].grand_value) {
        out.Fail("v decreases with N at d=" + std::to_string(config.price_values[k]));
      }
    }
  }
  if (out.passed) out.detail = "N in {2,4,7} x " + std::to_string(per_n) + " prices";
  return out;
}

// 9. x = r - p per player and sum p = d C* on every scenario run.
Outcome SettlementBalance() {
  Outcome out;
  int checked = 0;
  for (const Preset& p : Presets()) {
    for (const SweepRecord& r : RunPreset(std::string(p.name))) {
      ++checked;
      double payments = 0.0;
      for (const PlayerRow& row : r.players) {
        payments += row.payment;
        if (!RelClose(row.payoff, row.r_hat - row.payment, 1e-9)) {
          out.Fail(r.scenario + ": x != r - p for " + row.player_id);
        }
      }
      const double capex = r.price_per_millicore * r.capacity;
      if (!RelClose(payments, capex, 1e-6)) {
        out.Fail(r.scenario + ": sum p != d C*");
      }
    }
  }
  if (out.passed) out.detail = std::to_string(checked) + " records from every preset";
  return out;
}

// 10. Two CLI runs with the same config and seed give identical records.csv.
Outcome Determinism() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / ("coinvest_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path config = dir / "config.json";
  std::ofstream(config) << R"({"scenario": "price-sweep", "shapley": {"method": "sample", "samples": 5000}})";
  std::string contents[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path out_dir = dir / ("run" + std::to_string(run));
    const std::string command = std::string(COINVEST_CLI_PATH) + " run " + config.string() +
                                " --seed 77 --out " + out_dir.string() + " > /dev/null";
    const int status = std::system(command.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out.Fail("coinvest run failed");
    std::ifstream in(out_dir / "records.csv", std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    contents[run] = buffer.str();
  }
  if (contents[0].empty()) out.Fail("records.csv missing");
  if (contents[0] != contents[1]) out.Fail("records.csv differs between runs");
  if (out.passed) out.detail = std::to_string(contents[0].size()) + " identical bytes";
  fs::remove_all(dir);
  return out;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
  double time_limit_s;  // 0 = none stated
};

}  // namespace
}  // namespace coinvest

int main() {
  using namespace coinvest;
  const Criterion criteria[] = {
      {"AC1 equal split between owner and SPs", EqualSplit, 10.0},
      {"AC2 oracle triangle enum/closed/sampling", OracleTriangle, 60.0},
      {"AC3 supermodularity (convex game)", Convexity, 30.0},
      {"AC4 Shapley value in the core", Core, 0.0},
      {"AC5 closed form vs brute-force allocation", BruteForceAllocation, 0.0},
      {"AC6 capacity sublinear, value near-linear in load", CapacityAndValueTrend, 0.0},
      {"AC7 omega capacity share and owner half", OmegaTrend, 0.0},
      {"AC8 price and player-count trends", PriceTrend, 0.0},
      {"AC9 settlement balance", SettlementBalance, 0.0},
      {"AC10 deterministic records.csv", Determinism, 0.0},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.Fail("took " + std::to_string(seconds) + " s");
    }
    failures += !outcome.passed;
    std::printf("[%s] %s: %s (%.2f s)\n", outcome.passed ? "PASS" : "FAIL", c.name,
                outcome.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
