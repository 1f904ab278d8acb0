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

#include "coinvest/load_synthesis.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coinvest {
namespace {

double RawLoad(const SinusoidalLoadSpec& spec, int t) {
  double value = spec.base;
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    const SinusoidalComponent& c = spec.components[k];
    const double harmonic = static_cast<double>(k + 1);
    value += c.amplitude * std::sin(2.0 * harmonic * std::numbers::pi *
                                    (t - c.offset) / spec.slots);
  }
  return value;
}

}  // namespace

void SinusoidalLoadSpec::Validate() const {
  if (components.empty()) {
    throw std::invalid_argument("load_shape.components: need at least one");
  }
  if (slots < 1) throw std::invalid_argument("load_shape.slots: must be >= 1");
  if (!std::isfinite(base)) {
    throw std::invalid_argument("load_shape.a0: must be finite");
  }
  for (const SinusoidalComponent& c : components) {
    if (!std::isfinite(c.amplitude) || !std::isfinite(c.offset)) {
      throw std::invalid_argument("load_shape.components: must be finite");
    }
  }
}

SinusoidalLoadSpec DefaultResidentialShape(int slots) {
  const double scale = slots / 96.0;
  return {1.0, {{0.45, 66.0 * scale}, {0.15, 30.0 * scale}}, slots};
}

LoadProfile SynthLoad(const SinusoidalLoadSpec& spec) {
  spec.Validate();
  std::vector<double> loads(spec.slots);
  for (int t = 1; t <= spec.slots; ++t) {
    loads[t - 1] = std::max(0.0, RawLoad(spec, t));
  }
  return LoadProfile(std::move(loads));
}

int CountClampedSlots(const SinusoidalLoadSpec& spec) {
  spec.Validate();
  int clamped = 0;
  for (int t = 1; t <= spec.slots; ++t) clamped += RawLoad(spec, t) < 0.0;
  return clamped;
}

LoadProfile ScaleLoad(const LoadProfile& profile, double factor) {
  if (!(std::isfinite(factor) && factor >= 0.0)) {
    throw std::invalid_argument("scale factor must be finite and >= 0");
  }
  std::vector<double> loads(profile.loads().begin(), profile.loads().end());
  for (double& l : loads) l *= factor;
  return LoadProfile(std::move(loads));
}

LoadProfile ScaleToDailyTotal(const LoadProfile& profile, double daily_total) {
  if (!(std::isfinite(daily_total) && daily_total >= 0.0)) {
    throw std::invalid_argument("daily total must be finite and >= 0");
  }
  if (daily_total == 0.0) return ScaleLoad(profile, 0.0);
  const double current = profile.DailyTotal();
  if (current <= 0.0) {
    throw std::invalid_argument("cannot rescale an all-zero load profile");
  }
  return ScaleLoad(profile, daily_total / current);
}

}  // namespace coinvest
