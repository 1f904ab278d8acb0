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

#include "coinvest/load_profile.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "coinvest/summation.h"

namespace coinvest {

LoadProfile::LoadProfile(std::vector<double> loads) : loads_(std::move(loads)) {
  for (std::size_t t = 0; t < loads_.size(); ++t) {
    if (!std::isfinite(loads_[t]) || loads_[t] < 0.0) {
      throw std::invalid_argument("load: slot " + std::to_string(t) +
                                  " must be finite and >= 0");
    }
  }
}

LoadProfile LoadProfile::Zero(int slots) { return Constant(slots, 0.0); }

LoadProfile LoadProfile::Constant(int slots, double level) {
  if (slots < 1) throw std::invalid_argument("load: slots must be >= 1");
  return LoadProfile(std::vector<double>(slots, level));
}

double LoadProfile::DailyTotal() const { return CompensatedTotal(loads_); }

}  // namespace coinvest
