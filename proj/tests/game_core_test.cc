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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "coinvest/allocation.h"
#include "coinvest/characteristic_function.h"
#include "coinvest/game.h"
#include "coinvest/golden_section.h"
#include "coinvest/load_synthesis.h"
#include "coinvest/utility.h"
#include "gtest/gtest.h"
#include "random_games.h"

namespace coinvest {
namespace {

ServiceProvider FlatSp(double beta, double daily_load, int slots = 96) {
  return {"SP", beta, LoadProfile::Constant(slots, daily_load / slots)};
}

TEST(UtilityTest, ZeroResourcesGiveZeroUtility) {
  EXPECT_EQ(EvalUtility(1.0, 1.0, 5.0, 0.0), 0.0);
}

TEST(UtilityTest, HalfSaturationAtLnTwo) {
  EXPECT_NEAR(EvalUtility(1.0, 1.0, 1.0, std::numbers::ln2), 0.5, 1e-15);
}

TEST(UtilityTest, MatchesHighPrecisionValue) {
  // 200 * (1 - e^-1) evaluated with 40-digit arithmetic.
  EXPECT_NEAR(EvalUtility(2.0, 0.001, 100.0, 1000.0),
              126.4241117657115356808952459677, 1e-12);
}

TEST(UtilityTest, RejectsNegativeInputs) {
  EXPECT_THROW(EvalUtility(-1.0, 1.0, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(EvalUtility(1.0, 0.0, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(EvalUtility(1.0, 1.0, -1.0, 1.0), std::domain_error);
  EXPECT_THROW(EvalUtility(1.0, 1.0, 1.0, -1.0), std::domain_error);
  EXPECT_THROW(EvalUtility(1.0, 1.0, 1.0, NAN), std::domain_error);
}

TEST(UtilityTest, BoundedMonotoneAndConcave) {
  const double beta = 0.3, xi = 2e-3, load = 40.0;
  double previous = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double h = 25.0 * k;
    const double u = EvalUtility(beta, xi, load, h);
    EXPECT_GE(u, previous);
    EXPECT_LE(u, beta * load);
    const double mid = 0.5 * (EvalUtility(beta, xi, load, h - 25.0) +
                              EvalUtility(beta, xi, load, h + 25.0));
    EXPECT_GE(u, mid - 1e-12);
    previous = u;
  }
}

TEST(MarketTest, ValidationNamesField) {
  MarketParams m;
  m.price_per_millicore = -1.0;
  try {
    m.Validate();
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()).rfind("d:", 0), 0u) << e.what();
  }
  m = {};
  m.xi = 0.0;
  EXPECT_THROW(m.Validate(), std::invalid_argument);
  m = {};
  m.years = 0;
  EXPECT_THROW(m.Validate(), std::invalid_argument);
  EXPECT_EQ(MarketParams{.years = 3}.days(), 1095);
}

TEST(GoldenSectionTest, FindsInteriorAndBoundaryMaxima) {
  const ScalarMaximum interior =
      GoldenSectionMaximize([](double x) { return -(x - 2.0) * (x - 2.0); }, 0.0,
                            5.0, 1e-10);
  EXPECT_NEAR(interior.argmax, 2.0, 1e-8);
  const ScalarMaximum boundary =
      GoldenSectionMaximize([](double x) { return -x; }, 0.0, 5.0, 1e-10);
  EXPECT_EQ(boundary.argmax, 0.0);
}

TEST(OptimalAllocationTest, ZeroBetaIsNull) {
  for (MaximizerKind kind : {MaximizerKind::kClosedForm, MaximizerKind::kNumeric}) {
    const SingleAllocation a = OptimalAllocationSingle(FlatSp(0.0, 1e6), MarketParams{}, kind);
    EXPECT_EQ(a.h_star, 0.0);
    EXPECT_EQ(a.value, 0.0);
  }
}

TEST(OptimalAllocationTest, InactiveWhenRatioAtMostOne) {
  // D * xi * beta * L / d = xi * L / T with beta at the slot price; L = 9e4
  // gives 0.9375.
  const MarketParams market;
  const ServiceProvider sp = FlatSp(AmortizedSlotPrice(market), 9e4);
  for (MaximizerKind kind : {MaximizerKind::kClosedForm, MaximizerKind::kNumeric}) {
    const SingleAllocation a = OptimalAllocationSingle(sp, market, kind);
    EXPECT_EQ(a.h_star, 0.0);
    EXPECT_EQ(a.value, 0.0);
  }
  const double upper = NumericBracketUpper(sp, market);
  const testing::GridMax grid =
      testing::GridMaximize(sp.beta, 9e4, market, upper, 100000);
  EXPECT_EQ(grid.h, 0.0) << "a positive grid point beats h = 0";
}

TEST(OptimalAllocationTest, SlotPriceReferenceCase) {
  // beta = d / (D T), d = 0.05, D = 365, T = 96, xi = 1e-3, L = 1e6.
  // Reference values from 40-digit arithmetic.
  const MarketParams market;
  const ServiceProvider sp = FlatSp(AmortizedSlotPrice(market), 1e6);
  const SingleAllocation a = OptimalAllocationSingle(sp, market);
  EXPECT_NEAR(a.h_star, 2343.4070875143008135725685, 1e-9);
  EXPECT_NEAR(a.value, 353.66297895761829265470490734, 1e-9);

  const double upper = NumericBracketUpper(sp, market);
  const testing::GridMax grid =
      testing::GridMaximize(sp.beta, 1e6, market, upper, long(upper));
  EXPECT_LE(std::abs(grid.h - a.h_star), grid.step);
  EXPECT_LE(std::abs(grid.value - a.value), 1e-6 * a.value);
}

TEST(OptimalAllocationTest, ClosedFormAgreesWithNumericOnRandomInstances) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const GameInstance game = testing::RandomGame(rng, 1, 1);
    const ServiceProvider& sp = game.sp(0);
    const SingleAllocation cf =
        OptimalAllocationSingle(sp, game.market(), MaximizerKind::kClosedForm);
    const SingleAllocation num =
        OptimalAllocationSingle(sp, game.market(), MaximizerKind::kNumeric);
    EXPECT_LE(std::abs(cf.h_star - num.h_star), 1e-6 * std::max(1.0, cf.h_star))
        << "trial " << trial;
    EXPECT_LE(std::abs(cf.value - num.value), 1e-9 * std::max(1.0, cf.value))
        << "trial " << trial;
    EXPECT_GE(cf.value, 0.0);
  }
}

TEST(OptimalAllocationTest, NumericMaximumIsLocallyOptimal) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const GameInstance game = testing::RandomGame(rng, 1, 1);
    const ServiceProvider& sp = game.sp(0);
    const SingleAllocation num =
        OptimalAllocationSingle(sp, game.market(), MaximizerKind::kNumeric);
    const double delta = 1e-6 * std::max(1.0, num.h_star);
    EXPECT_GE(num.value, ContributionObjective(sp, game.market(), num.h_star + delta));
    if (num.h_star > delta) {
      EXPECT_GE(num.value, ContributionObjective(sp, game.market(), num.h_star - delta));
    }
  }
}

TEST(OptimalAllocationTest, LoadScalingShiftsAllocationByLogFactor) {
  const MarketParams market;
  const ServiceProvider sp{"SP", AmortizedSlotPrice(market),
                           ScaleToDailyTotal(SynthLoad(DefaultResidentialShape()), 2e6)};
  const double base = OptimalAllocationSingle(sp, market).h_star;
  ASSERT_GT(base, 0.0);
  for (double k : {1.5, 3.0, 10.0}) {
    ServiceProvider scaled = sp;
    scaled.load = ScaleLoad(sp.load, k);
    EXPECT_NEAR(OptimalAllocationSingle(scaled, market).h_star,
                base + std::log(k) / market.xi, 1e-9 * base);
  }
}

GameInstance TwoSpGame() {
  const MarketParams market;
  const double p = AmortizedSlotPrice(market);
  return GameInstance(market, {FlatSp(2 * p, 3e6), FlatSp(p, 1.5e6)});
}

TEST(CoalitionValueTest, OwnerIsVeto) {
  const GameInstance game = TwoSpGame();
  EXPECT_EQ(CoalitionValue(game, Coalition{0, 1}), 0.0);
  EXPECT_EQ(CoalitionValue(game, Coalition{0}), 0.0);
  EXPECT_EQ(CoalitionValue(game, Coalition{}), 0.0);
  EXPECT_EQ(CoalitionValue(game, Coalition{game.owner()}), 0.0);
}

TEST(CoalitionValueTest, OwnerWithOneSpIsItsContribution) {
  const GameInstance game = TwoSpGame();
  const double m1 = OptimalAllocationSingle(game.sp(0), game.market()).value;
  EXPECT_EQ(CoalitionValue(game, Coalition{0, game.owner()}), m1);
}

TEST(CoalitionValueTest, UnknownPlayerIsAnError) {
  const GameInstance game = TwoSpGame();
  EXPECT_THROW(CoalitionValue(game, Coalition{5}), std::out_of_range);
  const CoinvestmentGame cf(game);
  EXPECT_THROW(cf.Value(Coalition{3}), std::out_of_range);
}

TEST(CoalitionValueTest, MatchesJointBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const GameInstance game = testing::RandomGame(rng, 2, 2);
    const double upper = std::max(NumericBracketUpper(game.sp(0), game.market()),
                                  NumericBracketUpper(game.sp(1), game.market()));
    double resolution = 0.0;
    const double joint = testing::JointGridValue(game, upper, 800, &resolution);
    const double v = CoalitionValue(game, game.GrandCoalition());
    EXPECT_LE(joint, v + 1e-9 * std::max(1.0, v));
    EXPECT_GE(joint, v - resolution);
  }
}

TEST(CoalitionValueTest, MonotoneAndCachedGameAgrees) {
  std::mt19937_64 rng(5);
  const GameInstance game = testing::RandomGame(rng, 4, 4);
  const CoinvestmentGame cached(game);
  const std::uint64_t all = game.GrandCoalition().mask();
  for (std::uint64_t s = 0; s <= all; ++s) {
    const double vs = CoalitionValue(game, Coalition(s));
    EXPECT_DOUBLE_EQ(vs, cached.Value(Coalition(s)));
    EXPECT_GE(vs, 0.0);
    for (std::uint64_t t = s;; t = (t - 1) & s) {
      EXPECT_LE(CoalitionValue(game, Coalition(t)), vs + 1e-9);
      if (t == 0) break;
    }
  }
}

TEST(GrandAllocationTest, AllNullSps) {
  const GameInstance game(MarketParams{}, {FlatSp(0.0, 1e6), FlatSp(0.0, 2e6)});
  const Allocation a = GrandAllocation(game);
  EXPECT_EQ(a.capacity, 0.0);
  for (double h : a.shares) EXPECT_EQ(h, 0.0);
}

TEST(GrandAllocationTest, SingleSpTakesAllCapacity) {
  const MarketParams market;
  const GameInstance game(market, {FlatSp(AmortizedSlotPrice(market), 4e6)});
  const Allocation a = GrandAllocation(game);
  ASSERT_EQ(a.shares.size(), 2u);
  EXPECT_EQ(a.capacity, a.shares[0]);
  EXPECT_EQ(a.shares[1], 0.0);
}

TEST(GrandAllocationTest, IdenticalSpsGetEqualShares) {
  const MarketParams market;
  const ServiceProvider sp = FlatSp(AmortizedSlotPrice(market), 3e6);
  const GameInstance game(market, {sp, sp});
  const Allocation a = GrandAllocation(game);
  EXPECT_NEAR(a.shares[0], a.shares[1], 1e-9 * a.shares[0]);
  EXPECT_NEAR(a.capacity, a.shares[0] + a.shares[1], 1e-9 * a.capacity);
}

TEST(GameInstanceTest, RejectsInvalidInputs) {
  const MarketParams market;
  EXPECT_THROW(GameInstance(market, {}), std::invalid_argument);
  EXPECT_THROW(GameInstance(market, {FlatSp(-1.0, 1.0)}), std::invalid_argument);
  EXPECT_THROW(GameInstance(market, {FlatSp(1.0, 1.0, 48)}), std::invalid_argument);
  EXPECT_THROW(LoadProfile({1.0, -2.0}), std::invalid_argument);
  const GameInstance game(market, {FlatSp(1.0, 1.0)});
  EXPECT_EQ(game.owner(), 1);
  EXPECT_EQ(game.PlayerName(1), "NO");
}

}  // namespace
}  // namespace coinvest
