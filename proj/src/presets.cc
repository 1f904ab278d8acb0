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

#include "coinvest/presets.h"

#include <array>

namespace coinvest {
namespace {

// Generated from presets/*.json at configure time.
#include "coinvest/preset_data.inc"

constexpr std::array<Preset, 3> kPresets = {{
    {"load-sweep",
     "two same-type SPs (4:1 load split) swept over total daily load",
     k_load_sweep_json},
    {"omega-sweep",
     "two SPs (4:1 load split) with benefit weights 1 - omega and omega",
     k_omega_sweep_json},
    {"price-sweep", "N = 2, 4, 7 SPs swept over the capacity price d",
     k_price_sweep_json},
}};

}  // namespace

std::span<const Preset> Presets() { return kPresets; }

std::optional<Preset> FindPreset(std::string_view name) {
  for (const Preset& p : kPresets) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace coinvest
