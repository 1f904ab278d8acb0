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

#include "coinvest/settlement.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "coinvest/summation.h"
#include "coinvest/utility.h"

namespace coinvest {

Settlement Settle(const CoinvestmentGame& game,
                  std::span<const double> payoffs) {
  const GameInstance& instance = game.game();
  const int n = instance.num_players();
  if (static_cast<int>(payoffs.size()) != n) {
    throw std::invalid_argument("settle: payoff vector has " +
                                std::to_string(payoffs.size()) +
                                " entries for " + std::to_string(n) +
                                " players");
  }

  Settlement out;
  out.grand_value = game.Value(instance.GrandCoalition());
  const double total = CompensatedTotal(payoffs);
  if (std::abs(total - out.grand_value) >
      1e-9 * std::max(1.0, std::abs(out.grand_value))) {
    throw std::invalid_argument(
        "settle: payoffs sum to " + std::to_string(total) +
        " but the grand coalition is worth " + std::to_string(out.grand_value));
  }

  out.allocation.shares.assign(n, 0.0);
  CompensatedSum capacity;
  for (int i = 0; i < instance.num_sps(); ++i) {
    out.allocation.shares[i] = game.allocation(i).h_star;
    capacity.Add(out.allocation.shares[i]);
  }
  out.allocation.capacity = capacity.Total();

  out.players.resize(n);
  for (int i = 0; i < n; ++i) {
    PlayerSettlement& p = out.players[i];
    p.revenue = instance.IsOwner(i)
                    ? 0.0
                    : HorizonRevenue(instance.sp(i), instance.market(),
                                     out.allocation.shares[i]);
    p.payoff = payoffs[i];
    p.payment = p.revenue - p.payoff;
  }
  return out;
}

Settlement Settle(const GameInstance& game, std::span<const double> payoffs) {
  return Settle(CoinvestmentGame(game), payoffs);
}

}  // namespace coinvest
