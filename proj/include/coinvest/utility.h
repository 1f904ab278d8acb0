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

#ifndef COINVEST_UTILITY_H_
#define COINVEST_UTILITY_H_

#include "coinvest/game.h"
#include "coinvest/market.h"

namespace coinvest {

// Per-slot utility with diminishing return in the allocated resources:
// beta * load * (1 - exp(-xi * h)). Zero at h = 0, bounded by beta * load.
// Throws std::domain_error on negative or non-finite inputs, or xi <= 0.
double EvalUtility(double beta, double xi, double load, double h);

// Revenue of `sp` over the whole horizon when holding `h` millicores:
// D * sum_t u(l_t, h), summed with compensation over the slots.
double HorizonRevenue(const ServiceProvider& sp, const MarketParams& market,
                      double h);

// Separable contribution of one SP: HorizonRevenue(h) - d * h.
double ContributionObjective(const ServiceProvider& sp,
                             const MarketParams& market, double h);

}  // namespace coinvest

#endif  // COINVEST_UTILITY_H_
