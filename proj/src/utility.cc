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

#include "coinvest/utility.h"

#include <cmath>
#include <stdexcept>

#include "coinvest/summation.h"

namespace coinvest {

double EvalUtility(double beta, double xi, double load, double h) {
  if (!(std::isfinite(beta) && beta >= 0.0)) {
    throw std::domain_error("utility: beta must be >= 0");
  }
  if (!(std::isfinite(xi) && xi > 0.0)) {
    throw std::domain_error("utility: xi must be > 0");
  }
  if (!(std::isfinite(load) && load >= 0.0)) {
    throw std::domain_error("utility: load must be >= 0");
  }
  if (!(h >= 0.0) || std::isnan(h)) {
    throw std::domain_error("utility: h must be >= 0");
  }
  return beta * load * -std::expm1(-xi * h);
}

double HorizonRevenue(const ServiceProvider& sp, const MarketParams& market,
                      double h) {
  CompensatedSum daily;
  for (double load : sp.load.loads()) {
    daily.Add(EvalUtility(sp.beta, market.xi, load, h));
  }
  return market.days() * daily.Total();
}

double ContributionObjective(const ServiceProvider& sp,
                             const MarketParams& market, double h) {
  return HorizonRevenue(sp, market, h) - market.price_per_millicore * h;
}

}  // namespace coinvest
