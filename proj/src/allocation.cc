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

#include "coinvest/allocation.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coinvest/golden_section.h"
#include "coinvest/summation.h"
#include "coinvest/utility.h"

namespace coinvest {
namespace {

// D * xi * beta * L / d; the stationary point is positive iff this is > 1.
double ActivationRatio(const ServiceProvider& sp, const MarketParams& market) {
  return market.days() * market.xi * sp.beta * sp.load.DailyTotal() /
         market.price_per_millicore;
}

SingleAllocation ClosedForm(const ServiceProvider& sp,
                            const MarketParams& market) {
  const double ratio = ActivationRatio(sp, market);
  if (!(ratio > 1.0)) return {};
  const double h = std::log(ratio) / market.xi;
  const double value = ContributionObjective(sp, market, h);
  if (!(value > 0.0)) return {};
  return {h, value};
}

SingleAllocation Numeric(const ServiceProvider& sp,
                         const MarketParams& market) {
  const double upper = NumericBracketUpper(sp, market);
  const ScalarMaximum best = GoldenSectionMaximize(
      [&](double h) { return ContributionObjective(sp, market, h); }, 0.0,
      upper, 1e-8 * upper);
  if (!(best.value > 0.0)) return {};
  return {best.argmax, best.value};
}

}  // namespace

double NumericBracketUpper(const ServiceProvider& sp,
                           const MarketParams& market) {
  const double ratio = std::max(std::numbers::e, ActivationRatio(sp, market));
  return (std::log(ratio) + 10.0) / market.xi;
}

SingleAllocation OptimalAllocationSingle(const ServiceProvider& sp,
                                         const MarketParams& market,
                                         MaximizerKind kind) {
  market.Validate();
  if (sp.beta == 0.0) return {};
  return kind == MaximizerKind::kClosedForm ? ClosedForm(sp, market)
                                            : Numeric(sp, market);
}

Allocation GrandAllocation(const GameInstance& game, MaximizerKind kind) {
  Allocation out;
  out.shares.assign(game.num_players(), 0.0);
  CompensatedSum capacity;
  for (int i = 0; i < game.num_sps(); ++i) {
    out.shares[i] = OptimalAllocationSingle(game.sp(i), game.market(), kind).h_star;
    capacity.Add(out.shares[i]);
  }
  out.capacity = capacity.Total();
  return out;
}

}  // namespace coinvest
