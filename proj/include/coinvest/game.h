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

#ifndef COINVEST_GAME_H_
#define COINVEST_GAME_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coinvest/load_profile.h"
#include "coinvest/market.h"

namespace coinvest {

struct ServiceProvider {
  std::string id;
  double beta = 0.0;  // money per served load unit
  LoadProfile load;
};

// A set of players encoded as a bitmask over player indices.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 64;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}
  Coalition(std::initializer_list<int> players);

  // {0, 1, ..., num_players - 1}.
  static Coalition All(int num_players);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool Contains(int player) const {
    return (mask_ >> player) & std::uint64_t{1};
  }
  constexpr Coalition With(int player) const {
    return Coalition(mask_ | (std::uint64_t{1} << player));
  }
  constexpr Coalition Without(int player) const {
    return Coalition(mask_ & ~(std::uint64_t{1} << player));
  }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool IsSubsetOf(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  std::vector<int> Members() const;
  std::string ToString() const;

  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  std::uint64_t mask_ = 0;
};

// One Network Owner plus N >= 1 service providers under common market
// constants. Players 0..N-1 are the SPs in order; player N is the owner,
// which has no load and a zero benefit factor. Immutable once built.
class GameInstance {
 public:
  // Validates the market and every SP; load profiles must have exactly
  // market.slots_per_day entries.
  GameInstance(MarketParams market, std::vector<ServiceProvider> sps);

  const MarketParams& market() const { return market_; }
  const std::vector<ServiceProvider>& sps() const { return sps_; }
  const ServiceProvider& sp(int index) const { return sps_[index]; }
  int num_sps() const { return static_cast<int>(sps_.size()); }
  int num_players() const { return num_sps() + 1; }
  int owner() const { return num_sps(); }
  bool IsOwner(int player) const { return player == owner(); }
  Coalition GrandCoalition() const { return Coalition::All(num_players()); }

  // "NO" for the owner, the SP id otherwise.
  std::string PlayerName(int player) const;

 private:
  MarketParams market_;
  std::vector<ServiceProvider> sps_;
};

}  // namespace coinvest

#endif  // COINVEST_GAME_H_
