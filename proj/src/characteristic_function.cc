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

#include "coinvest/characteristic_function.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "coinvest/summation.h"

namespace coinvest {

void CharacteristicFunction::CheckMembers(Coalition coalition) const {
  if (!coalition.IsSubsetOf(Coalition::All(num_players()))) {
    throw std::out_of_range("coalition " + coalition.ToString() +
                            " references players outside a " +
                            std::to_string(num_players()) + "-player game");
  }
}

double CoalitionValue(const GameInstance& game, Coalition coalition) {
  if (!coalition.IsSubsetOf(game.GrandCoalition())) {
    throw std::out_of_range("coalition " + coalition.ToString() +
                            " references unknown players");
  }
  if (!coalition.Contains(game.owner())) return 0.0;
  CompensatedSum value;
  for (int i = 0; i < game.num_sps(); ++i) {
    if (coalition.Contains(i)) {
      value.Add(OptimalAllocationSingle(game.sp(i), game.market()).value);
    }
  }
  return value.Total();
}

CoinvestmentGame::CoinvestmentGame(GameInstance game, MaximizerKind kind)
    : game_(std::move(game)) {
  allocations_.reserve(game_.num_sps());
  for (const ServiceProvider& sp : game_.sps()) {
    allocations_.push_back(OptimalAllocationSingle(sp, game_.market(), kind));
  }
}

double CoinvestmentGame::Value(Coalition coalition) const {
  CheckMembers(coalition);
  if (!coalition.Contains(game_.owner())) return 0.0;
  CompensatedSum value;
  for (int i = 0; i < game_.num_sps(); ++i) {
    if (coalition.Contains(i)) value.Add(allocations_[i].value);
  }
  return value.Total();
}

TabularGame::TabularGame(int num_players, std::vector<double> values)
    : num_players_(num_players), values_(std::move(values)) {
  if (num_players < 1 || num_players > kMaxEnumerationPlayers) {
    throw std::invalid_argument("tabular game: player count out of range");
  }
  if (values_.size() != (std::size_t{1} << num_players)) {
    throw std::invalid_argument("tabular game: need 2^n values, got " +
                                std::to_string(values_.size()));
  }
  values_[0] = 0.0;
}

double TabularGame::Value(Coalition coalition) const {
  CheckMembers(coalition);
  return values_[coalition.mask()];
}

std::vector<double> TabulateValues(const CharacteristicFunction& game,
                                   int max_players) {
  const int n = game.num_players();
  if (n > max_players) {
    throw std::length_error(std::to_string(n) +
                            " players exceed the enumeration bound of " +
                            std::to_string(max_players) +
                            "; use permutation sampling instead");
  }
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = game.Value(Coalition(mask));
  }
  return values;
}

}  // namespace coinvest
