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

#ifndef COINVEST_SCENARIOS_H_
#define COINVEST_SCENARIOS_H_

#include <span>
#include <vector>

#include "coinvest/game.h"
#include "coinvest/load_synthesis.h"
#include "coinvest/market.h"

namespace coinvest {

// Two SPs with the same benefit factor, the amortised slot price d/(D*T), and
// the same load shape; SP1 carries 4/5 of `l_total` and SP2 1/5, so
// l1_t = 4 * l2_t in every slot.
GameInstance ScenarioSameType(double l_total, const MarketParams& market,
                              const SinusoidalLoadSpec& shape);

// The same-type loads with heterogeneous benefit factors
// beta1 = (1 - omega) * 2 p, beta2 = omega * 2 p. omega must be in [0.5, 1].
GameInstance ScenarioOmega(double omega, double l_total,
                           const MarketParams& market,
                           const SinusoidalLoadSpec& shape);

// `num_sps` identical SPs sharing `l_total` equally, one game per price in
// `prices`. The benefit factor stays at the slot price of `market_base`, so
// only the CAPEX price changes along the sweep.
std::vector<GameInstance> ScenarioPriceSweep(int num_sps,
                                             std::span<const double> prices,
                                             double l_total,
                                             const MarketParams& market_base,
                                             const SinusoidalLoadSpec& shape);

}  // namespace coinvest

#endif  // COINVEST_SCENARIOS_H_
