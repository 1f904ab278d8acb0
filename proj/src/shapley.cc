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

#include "coinvest/shapley.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "coinvest/summation.h"

namespace coinvest {
namespace {

// |S|! (n - |S| - 1)! / n! = 1 / (n * binom(n - 1, |S|)).
std::vector<double> ShapleyWeights(int n) {
  std::vector<double> weights(n);
  double binom = 1.0;
  for (int k = 0; k < n; ++k) {
    weights[k] = 1.0 / (n * binom);
    binom = binom * (n - 1 - k) / (k + 1);
  }
  return weights;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Running mean and sum of squared deviations per player.
struct Moments {
  std::int64_t count = 0;
  std::vector<double> mean;
  std::vector<double> m2;

  explicit Moments(int n) : mean(n, 0.0), m2(n, 0.0) {}

  void Add(std::span<const double> x) {
    ++count;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double delta = x[i] - mean[i];
      mean[i] += delta / count;
      m2[i] += delta * (x[i] - mean[i]);
    }
  }

  void Merge(const Moments& other) {
    if (other.count == 0) return;
    const std::int64_t total = count + other.count;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double delta = other.mean[i] - mean[i];
      mean[i] += delta * other.count / total;
      m2[i] += other.m2[i] +
               delta * delta * static_cast<double>(count) * other.count / total;
    }
    count = total;
  }
};

void Marginals(const CharacteristicFunction& game, std::span<const int> order,
               std::span<double> out) {
  Coalition s;
  double previous = game.Value(s);
  for (int p : order) {
    s = s.With(p);
    const double current = game.Value(s);
    out[p] = current - previous;
    previous = current;
  }
}

constexpr std::int64_t kUnitsPerChunk = 2048;

Moments SampleChunk(const CharacteristicFunction& game, std::uint64_t seed,
                    std::int64_t chunk, std::int64_t units, bool antithetic) {
  const int n = game.num_players();
  std::mt19937_64 rng(SplitMix64(seed ^ SplitMix64(chunk + 1)));
  std::vector<int> order(n);
  std::vector<double> forward(n), backward(n);
  Moments moments(n);
  for (std::int64_t u = 0; u < units; ++u) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Marginals(game, order, forward);
    if (antithetic) {
      std::reverse(order.begin(), order.end());
      Marginals(game, order, backward);
      for (int i = 0; i < n; ++i) forward[i] = 0.5 * (forward[i] + backward[i]);
    }
    moments.Add(forward);
  }
  return moments;
}

}  // namespace

std::string_view ShapleyMethodName(ShapleyMethod method) {
  switch (method) {
    case ShapleyMethod::kSubsetEnumeration: return "enum";
    case ShapleyMethod::kPermutationSampling: return "sample";
    case ShapleyMethod::kClosedForm: return "closed";
  }
  return "unknown";
}

double MarginalContribution(const CharacteristicFunction& game, int player,
                            Coalition coalition) {
  if (player < 0 || player >= game.num_players()) {
    throw std::out_of_range("marginal contribution: unknown player");
  }
  if (coalition.Contains(player)) {
    throw std::invalid_argument("marginal contribution: player " +
                                std::to_string(player) + " already in " +
                                coalition.ToString());
  }
  return game.Value(coalition.With(player)) - game.Value(coalition);
}

ShapleyResult ShapleyEnumeration(const CharacteristicFunction& game) {
  const int n = game.num_players();
  const std::vector<double> values = TabulateValues(game);
  const std::vector<double> weights = ShapleyWeights(n);

  ShapleyResult result;
  result.method = ShapleyMethod::kSubsetEnumeration;
  result.payoffs.assign(n, 0.0);
  result.standard_errors.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    CompensatedSum phi;
    for (std::uint64_t s = 0; s < values.size(); ++s) {
      if (s & bit) continue;
      const double delta = values[s | bit] - values[s];
      if (delta != 0.0) phi.Add(weights[std::popcount(s)] * delta);
    }
    result.payoffs[i] = phi.Total();
  }
  return result;
}

ShapleyResult ShapleyClosedForm(const CoinvestmentGame& game) {
  const GameInstance& instance = game.game();
  ShapleyResult result;
  result.method = ShapleyMethod::kClosedForm;
  result.payoffs.assign(instance.num_players(), 0.0);
  result.standard_errors.assign(instance.num_players(), 0.0);
  CompensatedSum owner;
  for (int i = 0; i < instance.num_sps(); ++i) {
    result.payoffs[i] = 0.5 * game.contribution(i);
    owner.Add(result.payoffs[i]);
  }
  result.payoffs[instance.owner()] = owner.Total();
  return result;
}

ShapleyResult ShapleySampling(const CharacteristicFunction& game,
                              std::int64_t samples, std::uint64_t seed,
                              SamplingOptions options) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int n = game.num_players();
  const std::int64_t units = options.antithetic ? (samples + 1) / 2 : samples;
  const std::int64_t chunks = (units + kUnitsPerChunk - 1) / kUnitsPerChunk;

  std::vector<Moments> partial(chunks, Moments(n));
  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t begin = c * kUnitsPerChunk;
    const std::int64_t count = std::min(kUnitsPerChunk, units - begin);
    partial[c] = SampleChunk(game, seed, c, count, options.antithetic);
  };

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, chunks));
  if (threads == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::int64_t c = t; c < chunks; c += threads) run_chunk(c);
      });
    }
  }

  Moments total(n);
  for (const Moments& m : partial) total.Merge(m);

  ShapleyResult result;
  result.method = ShapleyMethod::kPermutationSampling;
  result.sample_count = options.antithetic ? 2 * units : units;
  result.payoffs = total.mean;
  result.standard_errors.assign(n, std::numeric_limits<double>::infinity());
  if (total.count > 1) {
    for (int i = 0; i < n; ++i) {
      const double variance = total.m2[i] / (total.count - 1);
      result.standard_errors[i] = std::sqrt(std::max(0.0, variance) / total.count);
    }
  }
  return result;
}

}  // namespace coinvest
