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

#ifndef COINVEST_CONFIG_H_
#define COINVEST_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coinvest/load_synthesis.h"
#include "coinvest/market.h"
#include "coinvest/shapley.h"
#include "json.hpp"

namespace coinvest {

// Malformed or invalid configuration. The message names the offending key
// (dotted path) or the line/column of a syntax error.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { kSameType, kOmega, kPriceSweep, kCustom };

std::string_view ScenarioKindName(ScenarioKind kind);

struct CustomSp {
  std::string id;
  double beta = 0.0;
  // Either an explicit per-slot profile or a daily total spread over the
  // configured load shape.
  std::optional<double> daily_load;
  std::vector<double> loads;
};

// Raw characteristic function, bypassing the coinvestment model. values[S]
// is v(S) for coalition mask S.
struct FixtureGame {
  std::string name;
  int players = 0;
  std::vector<double> values;
};

struct RunConfig {
  std::string name;  // label for the scenario column; defaults to the kind
  ScenarioKind scenario = ScenarioKind::kSameType;
  MarketParams market;
  SinusoidalLoadSpec load_shape = DefaultResidentialShape();

  std::vector<double> same_type_l_total;  // daily totals, requests/day
  std::vector<double> omega_values;
  double omega_l_total = 5e6;
  std::vector<double> price_values;  // d grid
  std::vector<int> price_num_sps = {2, 4, 7};
  double price_per_sp_load = 1e6;
  std::vector<CustomSp> custom_sps;
  std::vector<FixtureGame> fixtures;

  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 42;
  ShapleyMethod method = ShapleyMethod::kClosedForm;
  std::int64_t samples = 100000;

  RunConfig();

  // Throws ConfigError naming the first invalid field.
  void Validate() const;
};

// {1e6, 2e6, ..., 1e7}.
std::vector<double> DefaultLoadGrid();
// {0.5, 0.55, ..., 1.0}.
std::vector<double> DefaultOmegaGrid();
// 20 log-spaced prices in [0.005, 0.5].
std::vector<double> DefaultPriceGrid();

// Parses a JSON config; missing keys take the defaults above, unknown keys
// are rejected. An empty (or whitespace-only) text yields the defaults.
RunConfig ParseConfig(std::string_view text);
RunConfig LoadConfigFile(const std::filesystem::path& path);

// Fully resolved config, suitable for ParseConfig.
nlohmann::ordered_json ConfigToJson(const RunConfig& config);

ShapleyMethod ParseShapleyMethod(std::string_view name);

}  // namespace coinvest

#endif  // COINVEST_CONFIG_H_
