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

#include "coinvest/scenarios.h"

#include <stdexcept>
#include <string>

namespace coinvest {
namespace {

LoadProfile Shape(const SinusoidalLoadSpec& shape, const MarketParams& market) {
  if (shape.slots != market.slots_per_day) {
    throw std::invalid_argument("load_shape.slots must equal slots_per_day");
  }
  return SynthLoad(shape);
}

void CheckTotal(double l_total) {
  if (!(l_total >= 0.0)) throw std::invalid_argument("l_total must be >= 0");
}

GameInstance TwoSps(double beta1, double beta2, double l_total,
                    const MarketParams& market,
                    const SinusoidalLoadSpec& shape) {
  CheckTotal(l_total);
  const LoadProfile small = ScaleToDailyTotal(Shape(shape, market), l_total / 5.0);
  const LoadProfile large = ScaleLoad(small, 4.0);
  return GameInstance(market, {{"SP1", beta1, large}, {"SP2", beta2, small}});
}

}  // namespace

GameInstance ScenarioSameType(double l_total, const MarketParams& market,
                              const SinusoidalLoadSpec& shape) {
  market.Validate();
  const double beta = AmortizedSlotPrice(market);
  return TwoSps(beta, beta, l_total, market, shape);
}

GameInstance ScenarioOmega(double omega, double l_total,
                           const MarketParams& market,
                           const SinusoidalLoadSpec& shape) {
  if (!(omega >= 0.5 && omega <= 1.0)) {
    throw std::invalid_argument("omega must be in [0.5, 1], got " +
                                std::to_string(omega));
  }
  market.Validate();
  const double beta_total = 2.0 * AmortizedSlotPrice(market);
  return TwoSps((1.0 - omega) * beta_total, omega * beta_total, l_total, market,
                shape);
}

std::vector<GameInstance> ScenarioPriceSweep(int num_sps,
                                             std::span<const double> prices,
                                             double l_total,
                                             const MarketParams& market_base,
                                             const SinusoidalLoadSpec& shape) {
  if (prices.empty()) throw std::invalid_argument("d values: empty price grid");
  if (num_sps < 1) throw std::invalid_argument("num_sps must be >= 1");
  CheckTotal(l_total);
  market_base.Validate();
  const double beta = AmortizedSlotPrice(market_base);
  const LoadProfile share =
      ScaleToDailyTotal(Shape(shape, market_base), l_total / num_sps);

  std::vector<ServiceProvider> sps;
  for (int i = 0; i < num_sps; ++i) {
    sps.push_back({"SP" + std::to_string(i + 1), beta, share});
  }
  std::vector<GameInstance> games;
  games.reserve(prices.size());
  for (double d : prices) {
    MarketParams market = market_base;
    market.price_per_millicore = d;
    games.emplace_back(market, sps);
  }
  return games;
}

}  // namespace coinvest
