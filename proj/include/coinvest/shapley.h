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

#ifndef COINVEST_SHAPLEY_H_
#define COINVEST_SHAPLEY_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coinvest/characteristic_function.h"
#include "coinvest/game.h"

namespace coinvest {

// One entry per player, indexed like the game's players.
using PayoffVector = std::vector<double>;

enum class ShapleyMethod { kSubsetEnumeration, kPermutationSampling, kClosedForm };

std::string_view ShapleyMethodName(ShapleyMethod method);

struct ShapleyResult {
  PayoffVector payoffs;
  ShapleyMethod method = ShapleyMethod::kSubsetEnumeration;
  // Permutations evaluated; set for sampling only.
  std::optional<std::int64_t> sample_count;
  // Per-player standard error of the estimate; all zero for exact methods.
  std::vector<double> standard_errors;
};

// v(S u {i}) - v(S). Throws std::invalid_argument if i is already in S.
double MarginalContribution(const CharacteristicFunction& game, int player,
                            Coalition coalition);

// Exact Shapley value by weighting every marginal contribution
// v(S u {i}) - v(S) with |S|! (n - |S| - 1)! / n!. Throws std::length_error
// above kMaxEnumerationPlayers.
ShapleyResult ShapleyEnumeration(const CharacteristicFunction& game);

// Exact Shapley value of a coinvestment game in O(N): the owner precedes a
// given SP in half of all arrival orders, so each SP receives m_i / 2 and the
// owner receives half of the grand-coalition value.
ShapleyResult ShapleyClosedForm(const CoinvestmentGame& game);

struct SamplingOptions {
  // Evaluate each random permutation together with its reverse and average
  // the pair. Unbiased for any game; the standard error is taken over pairs.
  bool antithetic = true;
  // 0 picks std::thread::hardware_concurrency(). The estimate does not
  // depend on this value.
  int threads = 0;
};

// Monte Carlo estimate of the Shapley value from random arrival orders.
// `samples` is the number of permutations evaluated (rounded up to even in
// antithetic mode). Deterministic for a fixed seed.
ShapleyResult ShapleySampling(const CharacteristicFunction& game,
                              std::int64_t samples, std::uint64_t seed,
                              SamplingOptions options = {});

}  // namespace coinvest

#endif  // COINVEST_SHAPLEY_H_
