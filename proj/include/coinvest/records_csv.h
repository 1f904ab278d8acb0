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

#ifndef COINVEST_RECORDS_CSV_H_
#define COINVEST_RECORDS_CSV_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinvest/sweep.h"

namespace coinvest {

// Fixed column order of records.csv; one row per player per sweep point.
inline constexpr std::string_view kRecordColumns[] = {
    "scenario", "sweep_param", "sweep_value", "player_id", "beta",
    "daily_load", "h_star",   "C_star",      "r_hat",     "shapley",
    "payment",  "payoff",     "v_grand"};

// 17 significant digits, enough to round-trip any double.
std::string FormatDouble(double value);

void WriteRecordsCsv(std::ostream& out, std::span<const SweepRecord> records);

// Inverse of WriteRecordsCsv. A record ends at its owner ("NO") row. The
// price column is not serialised, so price_per_millicore is left at zero.
// Throws std::runtime_error with the line number on malformed input.
std::vector<SweepRecord> ReadRecordsCsv(std::istream& in);

// Writes `contents` to `path` through a temporary file and a rename.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents);

}  // namespace coinvest

#endif  // COINVEST_RECORDS_CSV_H_
