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

#include "coinvest/stability.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "coinvest/summation.h"

namespace coinvest {

CoreCheck CheckCore(const CharacteristicFunction& game,
                    std::span<const double> payoffs, double slack) {
  const int n = game.num_players();
  if (static_cast<int>(payoffs.size()) != n) {
    throw std::invalid_argument("core check: payoff vector has " +
                                std::to_string(payoffs.size()) +
                                " entries for " + std::to_string(n) +
                                " players");
  }
  const std::vector<double> values = TabulateValues(game);
  const std::uint64_t grand = values.size() - 1;

  // coalition_sum[S] = sum of payoffs of members of S.
  std::vector<double> coalition_sum(values.size(), 0.0);
  CoreCheck check;
  check.min_slack = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 1; s < values.size(); ++s) {
    const int lowest = std::countr_zero(s);
    coalition_sum[s] = coalition_sum[s & (s - 1)] + payoffs[lowest];
    const double excess = coalition_sum[s] - values[s];
    if (excess < check.min_slack) {
      check.min_slack = excess;
      check.tightest_coalition = Coalition(s);
    }
    if (excess < -slack && !check.violating_coalition) {
      check.violating_coalition = Coalition(s);
    }
  }

  const double total = CompensatedTotal(payoffs);
  check.efficient = std::abs(total - values[grand]) <=
                    1e-9 * std::max(1.0, std::abs(values[grand]));
  if (!check.efficient && !check.violating_coalition) {
    check.violating_coalition = Coalition(grand);
  }
  check.in_core = check.efficient && !check.violating_coalition;
  return check;
}

SupermodularityReport CheckSupermodularity(const CharacteristicFunction& game,
                                           double slack) {
  const std::vector<double> values =
      TabulateValues(game, kMaxSupermodularityPlayers);
  const int n = game.num_players();
  const std::uint64_t all = values.size() - 1;

  SupermodularityReport report;
  std::vector<double> marginal(values.size());
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    const std::uint64_t rest = all & ~bit;
    for (std::uint64_t s = 0; s <= all; ++s) {
      if (!(s & bit)) marginal[s] = values[s | bit] - values[s];
    }
    // S ranges over subsets of rest, T over subsets of S (including empty).
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      for (std::uint64_t t = s;; t = (t - 1) & s) {
        ++report.comparisons;
        if (marginal[t] > marginal[s] + slack && report.holds) {
          report.holds = false;
          report.counterexample = SupermodularityCounterexample{
              i, Coalition(t), Coalition(s), marginal[t], marginal[s]};
        }
        if (t == 0) break;
      }
      if (s == 0) break;
    }
  }
  return report;
}

std::vector<PlayerClass> ClassifyPlayers(const CharacteristicFunction& game,
                                         double tolerance) {
  const std::vector<double> values = TabulateValues(game);
  const int n = game.num_players();
  std::vector<PlayerClass> classes(n, PlayerClass{true, true});
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t s = 0; s < values.size(); ++s) {
      if (s & bit) continue;
      if (std::abs(values[s]) > tolerance) classes[i].veto = false;
      if (std::abs(values[s | bit] - values[s]) > tolerance) {
        classes[i].null = false;
      }
    }
  }
  return classes;
}

}  // namespace coinvest
