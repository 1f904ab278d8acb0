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

#include "coinvest/sweep.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "coinvest/characteristic_function.h"
#include "coinvest/settlement.h"
#include "coinvest/summation.h"

namespace coinvest {
namespace {

bool Close(double a, double b, double relative, double scale) {
  return std::abs(a - b) <= relative * std::max(1.0, std::abs(scale));
}

std::uint64_t PointSeed(std::uint64_t seed, std::size_t index) {
  return seed * 0x9e3779b97f4a7c15ULL + index;
}

ShapleyResult Payoffs(const CoinvestmentGame& game, const SweepOptions& options,
                      std::size_t index) {
  switch (options.method) {
    case ShapleyMethod::kSubsetEnumeration:
      return ShapleyEnumeration(game);
    case ShapleyMethod::kPermutationSampling:
      return ShapleySampling(game, options.samples,
                             PointSeed(options.seed, index), {.threads = 1});
    case ShapleyMethod::kClosedForm:
      break;
  }
  ShapleyResult closed = ShapleyClosedForm(game);
  if (game.num_players() <= options.cross_check_max_players) {
    const ShapleyResult exact = ShapleyEnumeration(game);
    const double scale = game.Value(game.game().GrandCoalition());
    for (int i = 0; i < game.num_players(); ++i) {
      if (!Close(closed.payoffs[i], exact.payoffs[i], 1e-9, scale)) {
        throw std::logic_error("closed-form Shapley value of player " +
                               std::to_string(i) +
                               " disagrees with enumeration");
      }
    }
  }
  return closed;
}

SweepRecord Solve(const SweepPoint& point, const SweepOptions& options,
                  std::size_t index) {
  const CoinvestmentGame game(point.game);
  const ShapleyResult shapley = Payoffs(game, options, index);
  const Settlement settlement = Settle(game, shapley.payoffs);
  const GameInstance& instance = point.game;

  SweepRecord record;
  record.scenario = point.scenario;
  record.sweep_param = point.sweep_param;
  record.sweep_value = point.sweep_value;
  record.price_per_millicore = instance.market().price_per_millicore;
  record.capacity = settlement.allocation.capacity;
  record.grand_value = settlement.grand_value;
  for (int i = 0; i < instance.num_players(); ++i) {
    PlayerRow row;
    row.player_id = instance.PlayerName(i);
    if (!instance.IsOwner(i)) {
      row.beta = instance.sp(i).beta;
      row.daily_load = instance.sp(i).load.DailyTotal();
    }
    row.h_star = settlement.allocation.shares[i];
    row.r_hat = settlement.players[i].revenue;
    row.shapley = shapley.payoffs[i];
    row.payment = settlement.players[i].payment;
    row.payoff = settlement.players[i].payoff;
    record.players.push_back(std::move(row));
  }

  const std::vector<std::string> problems = CheckRecordConsistency(record);
  if (!problems.empty()) {
    throw std::logic_error(problems.front());
  }
  return record;
}

}  // namespace

std::vector<std::string> CheckRecordConsistency(const SweepRecord& record) {
  std::vector<std::string> problems;
  CompensatedSum shares, shapley, payments;
  for (const PlayerRow& row : record.players) {
    shares.Add(row.h_star);
    shapley.Add(row.shapley);
    payments.Add(row.payment);
    if (!Close(row.payoff, row.r_hat - row.payment, 1e-9, row.r_hat)) {
      problems.push_back("x != r - p for player " + row.player_id);
    }
  }
  if (!Close(shares.Total(), record.capacity, 1e-9, record.capacity)) {
    problems.push_back("sum of shares differs from C*");
  }
  if (!Close(shapley.Total(), record.grand_value, 1e-9, record.grand_value)) {
    problems.push_back("sum of Shapley payoffs differs from v(N)");
  }
  const double capex = record.price_per_millicore * record.capacity;
  if (!Close(payments.Total(), capex, 1e-6, capex)) {
    problems.push_back("sum of payments differs from d * C*");
  }
  return problems;
}

std::vector<SweepRecord> RunSweep(std::span<const SweepPoint> points,
                                  const SweepOptions& options) {
  if (points.empty()) throw std::invalid_argument("sweep: no instances");
  std::vector<SweepRecord> records(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(points.size()));
  auto work = [&](int worker) {
    for (std::size_t i = worker; i < points.size(); i += threads) {
      try {
        records[i] = Solve(points[i], options, i);
      } catch (const std::exception& e) {
        errors[i] = std::make_exception_ptr(SweepError(i, e.what()));
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

}  // namespace coinvest
