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

#ifndef COINVEST_CHARACTERISTIC_FUNCTION_H_
#define COINVEST_CHARACTERISTIC_FUNCTION_H_

#include <string>
#include <vector>

#include "coinvest/allocation.h"
#include "coinvest/game.h"

namespace coinvest {

// A transferable-utility game: a player count and a value for every
// coalition. The solution concepts only see this interface, so hand-built
// fixtures can be checked with the same code as coinvestment games.
class CharacteristicFunction {
 public:
  virtual ~CharacteristicFunction() = default;
  virtual int num_players() const = 0;
  // Throws std::out_of_range if `coalition` names a player >= num_players().
  virtual double Value(Coalition coalition) const = 0;

 protected:
  void CheckMembers(Coalition coalition) const;
};

// Value of `coalition` in `game`: zero unless the owner is a member,
// otherwise the sum of the members' separable contributions.
double CoalitionValue(const GameInstance& game, Coalition coalition);

// Characteristic function of a coinvestment game with the per-SP
// contributions computed once up front.
class CoinvestmentGame final : public CharacteristicFunction {
 public:
  explicit CoinvestmentGame(GameInstance game,
                            MaximizerKind kind = MaximizerKind::kClosedForm);

  int num_players() const override { return game_.num_players(); }
  double Value(Coalition coalition) const override;

  const GameInstance& game() const { return game_; }
  // max_h contribution of SP `sp` (the m_i of the game).
  double contribution(int sp) const { return allocations_[sp].value; }
  const SingleAllocation& allocation(int sp) const { return allocations_[sp]; }

 private:
  GameInstance game_;
  std::vector<SingleAllocation> allocations_;
};

// Explicit value table indexed by coalition mask, v(empty) forced to 0.
// Used for fixtures that do not come from the coinvestment model.
class TabularGame final : public CharacteristicFunction {
 public:
  // values.size() must be 2^num_players.
  TabularGame(int num_players, std::vector<double> values);

  int num_players() const override { return num_players_; }
  double Value(Coalition coalition) const override;

 private:
  int num_players_;
  std::vector<double> values_;
};

// Largest player count for which the 2^n value table is materialised.
inline constexpr int kMaxEnumerationPlayers = 20;

// v(S) for every mask S in [0, 2^n). Throws std::length_error when n exceeds
// `max_players`.
std::vector<double> TabulateValues(const CharacteristicFunction& game,
                                   int max_players = kMaxEnumerationPlayers);

}  // namespace coinvest

#endif  // COINVEST_CHARACTERISTIC_FUNCTION_H_
