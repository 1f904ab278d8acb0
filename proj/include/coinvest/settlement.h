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

#ifndef COINVEST_SETTLEMENT_H_
#define COINVEST_SETTLEMENT_H_

#include <span>
#include <vector>

#include "coinvest/allocation.h"
#include "coinvest/characteristic_function.h"

namespace coinvest {

struct PlayerSettlement {
  double revenue = 0.0;  // r
  double payment = 0.0;  // p, negative when the player is paid
  double payoff = 0.0;   // x = r - p
};

// Up-front payments that turn a payoff vector into cash flows for the
// optimal grand-coalition investment.
struct Settlement {
  Allocation allocation;
  std::vector<PlayerSettlement> players;
  double grand_value = 0.0;
};

// Each SP is credited the revenue its own optimal share produces over the
// horizon; the owner serves no load and is credited nothing. Payments are
// then r - x, so they sum to d * C*. Throws std::invalid_argument if the
// payoffs do not sum to v(N) within 1e-9 relative.
Settlement Settle(const CoinvestmentGame& game, std::span<const double> payoffs);
Settlement Settle(const GameInstance& game, std::span<const double> payoffs);

}  // namespace coinvest

#endif  // COINVEST_SETTLEMENT_H_
