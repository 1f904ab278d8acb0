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

#ifndef COINVEST_LOAD_SYNTHESIS_H_
#define COINVEST_LOAD_SYNTHESIS_H_

#include <vector>

#include "coinvest/load_profile.h"

namespace coinvest {

struct SinusoidalComponent {
  double amplitude = 0.0;  // a_k, load units
  double offset = 0.0;     // t_k, timeslots
};

// Diurnal profile a0 + sum_k a_k * sin(2 k pi (t - t_k) / T), t = 1..T.
struct SinusoidalLoadSpec {
  double base = 1.0;  // a0
  std::vector<SinusoidalComponent> components;
  int slots = 96;

  // Throws std::invalid_argument: needs K >= 1, T >= 1, finite values.
  void Validate() const;
};

// Residential evening-peak shape: a0 = 1, (0.45, 66), (0.15, 30) on a 96-slot
// day. For other slot counts the offsets keep the same time of day.
SinusoidalLoadSpec DefaultResidentialShape(int slots = 96);

// Samples the spec at t = 1..T and clamps negative values to zero.
LoadProfile SynthLoad(const SinusoidalLoadSpec& spec);

// Number of slots where the raw sinusoid is negative and SynthLoad clamps.
int CountClampedSlots(const SinusoidalLoadSpec& spec);

// Pointwise multiplication. Throws std::invalid_argument if factor < 0.
LoadProfile ScaleLoad(const LoadProfile& profile, double factor);

// Rescales `profile` so its daily total is `daily_total`. Throws
// std::invalid_argument if the profile is all zeros and the target is not.
LoadProfile ScaleToDailyTotal(const LoadProfile& profile, double daily_total);

}  // namespace coinvest

#endif  // COINVEST_LOAD_SYNTHESIS_H_
