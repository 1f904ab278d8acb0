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

#ifndef COINVEST_STABILITY_H_
#define COINVEST_STABILITY_H_

#include <optional>
#include <span>
#include <vector>

#include "coinvest/characteristic_function.h"
#include "coinvest/game.h"

namespace coinvest {

inline constexpr int kMaxSupermodularityPlayers = 12;

struct CoreCheck {
  bool in_core = false;
  bool efficient = false;
  // First coalition, in mask order, with sum_{i in S} x_i < v(S) - slack; the
  // grand coalition when only efficiency fails.
  std::optional<Coalition> violating_coalition;
  // min over nonempty S of sum_{i in S} x_i - v(S), and where it occurs.
  double min_slack = 0.0;
  Coalition tightest_coalition;
};

// Exhaustive core membership test over all 2^n coalitions. Coalition
// rationality allows `slack` absolute shortfall; efficiency is checked to
// 1e-9 relative. Throws std::length_error above kMaxEnumerationPlayers and
// std::invalid_argument if x has the wrong length.
CoreCheck CheckCore(const CharacteristicFunction& game,
                    std::span<const double> payoffs, double slack = 1e-9);

struct SupermodularityCounterexample {
  int player = 0;
  Coalition smaller;  // T
  Coalition larger;   // S, with T subset of S, player in neither
  double smaller_marginal = 0.0;
  double larger_marginal = 0.0;
};

struct SupermodularityReport {
  bool holds = true;
  std::optional<SupermodularityCounterexample> counterexample;
  long long comparisons = 0;
};

// Brute-force check of marginal(i, T) <= marginal(i, S) + slack for every i
// and every T subset of S subset of N \ {i}. Throws std::length_error above
// kMaxSupermodularityPlayers.
SupermodularityReport CheckSupermodularity(const CharacteristicFunction& game,
                                           double slack = 1e-9);

struct PlayerClass {
  bool veto = false;  // v(S) = 0 for every S without the player
  bool null = false;  // zero marginal contribution to every S
};

std::vector<PlayerClass> ClassifyPlayers(const CharacteristicFunction& game,
                                         double tolerance = 1e-9);

}  // namespace coinvest

#endif  // COINVEST_STABILITY_H_
