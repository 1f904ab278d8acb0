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

#include "coinvest/market.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coinvest {

void MarketParams::Validate() const {
  if (!(std::isfinite(price_per_millicore) && price_per_millicore > 0.0)) {
    throw std::invalid_argument("d: price per millicore must be > 0");
  }
  if (years < 1) throw std::invalid_argument("years: must be >= 1");
  if (slots_per_day < 1) {
    throw std::invalid_argument("slots_per_day: must be >= 1");
  }
  if (!(std::isfinite(xi) && xi > 0.0)) {
    throw std::invalid_argument("xi: must be > 0");
  }
}

double AmortizedSlotPrice(const MarketParams& market) {
  return market.price_per_millicore /
         (static_cast<double>(market.days()) * market.slots_per_day);
}

}  // namespace coinvest
