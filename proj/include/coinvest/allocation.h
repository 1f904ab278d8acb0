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

#ifndef COINVEST_ALLOCATION_H_
#define COINVEST_ALLOCATION_H_

#include <vector>

#include "coinvest/game.h"
#include "coinvest/market.h"

namespace coinvest {

enum class MaximizerKind { kClosedForm, kNumeric };

// Best allocation for one SP in isolation and the contribution it yields.
struct SingleAllocation {
  double h_star = 0.0;  // millicores
  double value = 0.0;   // max_h ContributionObjective(h), always >= 0
};

// Maximises D * sum_t u(l_t, h) - d * h over h >= 0.
//
// kClosedForm uses the stationary point (1/xi) * ln(D*xi*beta*L / d), clamped
// to zero when the logarithm's argument is <= 1. kNumeric runs a
// golden-section search on [0, NumericBracketUpper]; it never returns an h
// whose objective is below the h = 0 value of zero.
SingleAllocation OptimalAllocationSingle(
    const ServiceProvider& sp, const MarketParams& market,
    MaximizerKind kind = MaximizerKind::kClosedForm);

// Upper end of the numeric bracket,
// (1/xi) * ln(max(e, D*xi*beta*L/d)) + 10/xi, which always contains the
// stationary point.
double NumericBracketUpper(const ServiceProvider& sp,
                           const MarketParams& market);

// Resource split for the grand coalition. shares has one entry per player;
// the owner's entry (last) is always zero and capacity is the sum of shares.
struct Allocation {
  std::vector<double> shares;
  double capacity = 0.0;
};

Allocation GrandAllocation(const GameInstance& game,
                           MaximizerKind kind = MaximizerKind::kClosedForm);

}  // namespace coinvest

#endif  // COINVEST_ALLOCATION_H_
