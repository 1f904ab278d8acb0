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

#include "coinvest/game.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace coinvest {

Coalition::Coalition(std::initializer_list<int> players) {
  for (int p : players) {
    if (p < 0 || p >= kMaxPlayers) {
      throw std::out_of_range("coalition: player index out of range");
    }
    mask_ |= std::uint64_t{1} << p;
  }
}

Coalition Coalition::All(int num_players) {
  if (num_players < 0 || num_players > kMaxPlayers) {
    throw std::out_of_range("coalition: player count out of range");
  }
  if (num_players == kMaxPlayers) return Coalition(~std::uint64_t{0});
  return Coalition((std::uint64_t{1} << num_players) - 1);
}

std::vector<int> Coalition::Members() const {
  std::vector<int> members;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    members.push_back(std::countr_zero(m));
  }
  return members;
}

std::string Coalition::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int p : Members()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

GameInstance::GameInstance(MarketParams market, std::vector<ServiceProvider> sps)
    : market_(market), sps_(std::move(sps)) {
  market_.Validate();
  if (sps_.empty()) throw std::invalid_argument("sps: need at least one SP");
  if (num_players() > Coalition::kMaxPlayers) {
    throw std::invalid_argument("sps: too many players for a coalition mask");
  }
  for (const ServiceProvider& sp : sps_) {
    if (!(std::isfinite(sp.beta) && sp.beta >= 0.0)) {
      throw std::invalid_argument("beta: SP '" + sp.id + "' must be >= 0");
    }
    if (sp.load.slots() != market_.slots_per_day) {
      throw std::invalid_argument("load: SP '" + sp.id + "' has " +
                                  std::to_string(sp.load.slots()) +
                                  " slots, expected " +
                                  std::to_string(market_.slots_per_day));
    }
    if (sp.id == "NO") {
      throw std::invalid_argument("id: 'NO' is reserved for the owner");
    }
  }
}

std::string GameInstance::PlayerName(int player) const {
  if (IsOwner(player)) return "NO";
  return sps_.at(player).id;
}

}  // namespace coinvest
