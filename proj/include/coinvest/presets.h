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

#ifndef COINVEST_PRESETS_H_
#define COINVEST_PRESETS_H_

#include <optional>
#include <span>
#include <string_view>

namespace coinvest {

// A shipped config reproducing one figure's data table.
struct Preset {
  std::string_view name;
  std::string_view description;
  std::string_view config_json;
};

std::span<const Preset> Presets();
std::optional<Preset> FindPreset(std::string_view name);

}  // namespace coinvest

#endif  // COINVEST_PRESETS_H_
