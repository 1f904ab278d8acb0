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

#ifndef COINVEST_PIPELINE_H_
#define COINVEST_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coinvest/config.h"
#include "coinvest/stability.h"
#include "coinvest/sweep.h"
#include "json.hpp"

namespace coinvest {

inline constexpr char kToolVersion[] = "1.0.0";

// Games described by a config, labelled for records.csv.
std::vector<SweepPoint> BuildSweepPoints(const RunConfig& config);

struct InstanceChecks {
  // Classification and core check need the 2^n value table.
  bool core_checked = false;
  std::vector<PlayerClass> classes;
  CoreCheck core;
  bool supermodularity_checked = false;
  SupermodularityReport supermodularity;
};

struct FixtureChecks {
  std::string name;
  std::vector<double> shapley;
  CoreCheck core;
  SupermodularityReport supermodularity;
};

struct RunResult {
  std::vector<SweepRecord> records;
  std::vector<InstanceChecks> checks;
  std::vector<FixtureChecks> fixtures;
  int clamped_slots = 0;

  bool AllChecksPass() const;
};

// Solves every configured game and runs the stability checks (core of the
// Shapley payoffs, supermodularity up to kMaxSupermodularityPlayers).
RunResult ExecuteRun(const RunConfig& config);

nlohmann::ordered_json SummaryJson(const RunResult& result);
nlohmann::ordered_json MetaJson(const RunConfig& config, const RunResult& result);

// Writes records.csv, summary.json and meta.json into `dir`, creating it.
void WriteRunOutputs(const RunConfig& config, const RunResult& result,
                     const std::filesystem::path& dir);

struct PropertyOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Supermodularity, core membership, the enumeration/closed-form/sampling
// oracle triangle, the equal split between owner and SPs, and settlement
// balance over every configured game; fixtures get supermodularity and core.
std::vector<PropertyOutcome> VerifyConfig(const RunConfig& config);

}  // namespace coinvest

#endif  // COINVEST_PIPELINE_H_
