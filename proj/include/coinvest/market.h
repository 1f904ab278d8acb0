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

#ifndef COINVEST_MARKET_H_
#define COINVEST_MARKET_H_

namespace coinvest {

// Economic and temporal constants shared by every player of a game.
//
// Capacity is measured in millicores and money in dollars. `xi` is the
// saturation rate of the diminishing-return utility, per millicore; it is a
// free modelling parameter and defaults to 1e-3.
struct MarketParams {
  double price_per_millicore = 0.05;  // d, CAPEX per millicore
  int years = 1;                      // Y
  int slots_per_day = 96;             // T, 15-minute slots
  double xi = 1e-3;

  // D = 365 * Y.
  int days() const { return 365 * years; }

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

// Price of one millicore amortised over every slot of the horizon,
// d / (D * T). Used as the reference benefit factor of the scenarios.
double AmortizedSlotPrice(const MarketParams& market);

}  // namespace coinvest

#endif  // COINVEST_MARKET_H_
