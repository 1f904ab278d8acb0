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

#ifndef COINVEST_SWEEP_H_
#define COINVEST_SWEEP_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coinvest/game.h"
#include "coinvest/shapley.h"

namespace coinvest {

// One game of a parameter sweep together with its label.
struct SweepPoint {
  std::string scenario;
  std::string sweep_param;
  double sweep_value = 0.0;
  GameInstance game;
};

struct PlayerRow {
  std::string player_id;
  double beta = 0.0;
  double daily_load = 0.0;
  double h_star = 0.0;
  double r_hat = 0.0;
  double shapley = 0.0;
  double payment = 0.0;
  double payoff = 0.0;
};

// Solved sweep point: one row per player, SPs first and the owner last.
struct SweepRecord {
  std::string scenario;
  std::string sweep_param;
  double sweep_value = 0.0;
  double price_per_millicore = 0.0;
  double capacity = 0.0;     // C*
  double grand_value = 0.0;  // v(N)
  std::vector<PlayerRow> players;
};

struct SweepOptions {
  ShapleyMethod method = ShapleyMethod::kClosedForm;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  // Games with at most this many players have the closed-form Shapley value
  // re-derived by subset enumeration.
  int cross_check_max_players = 10;
  int threads = 0;
};

// Allocation, Shapley value and settlement for every point. Output order
// matches input order. Throws std::invalid_argument on an empty input and
// SweepError for the first point that fails to solve, including a record
// failing CheckRecordConsistency or the closed-form/enumeration cross-check.
std::vector<SweepRecord> RunSweep(std::span<const SweepPoint> points,
                                  const SweepOptions& options = {});

// Failure while solving one sweep point; `index` is its input position.
class SweepError : public std::runtime_error {
 public:
  SweepError(std::size_t index, const std::string& what)
      : std::runtime_error("instance " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Violations of sum h = C* and sum phi = v(N) (1e-9 relative), x = r - p
// (1e-9 relative) and sum p = d C* (1e-6 relative). Empty when consistent.
std::vector<std::string> CheckRecordConsistency(const SweepRecord& record);

}  // namespace coinvest

#endif  // COINVEST_SWEEP_H_
