// Copyright 2026 The twostate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "twostate/errors.hpp"
#include "twostate/greens.hpp"

namespace twostate {
namespace {

TEST(GreensConstant, ZeroEnergyDiagonal) {
  const ModelParams p{.E = 0.0, .V = 1.0};
  EXPECT_DOUBLE_EQ(greens_constant(0.0, 0.0, p).value, -0.5);
  const double grid = testing::greens_grid_extrapolated(0.0, 1.0, 0.5, 1.0);
  EXPECT_NEAR(grid, -0.5, 1e-6 * 0.5);
}

TEST(GreensConstant, SymmetricInArguments) {
  const ModelParams p{.E = 0.3, .V = 1.0};
  EXPECT_EQ(greens_constant(1.0, 0.0, p).value, greens_constant(0.0, 1.0, p).value);
  EXPECT_EQ(greens_constant(-2.5, 0.7, p).value, greens_constant(0.7, -2.5, p).value);
}

TEST(GreensConstant, HalfEnergyDiagonalMatchesGridOracle) {
  const ModelParams p{.E = 0.5, .V = 1.0};
  const double value = greens_constant(0.0, 0.0, p).value;
  EXPECT_NEAR(value, -0.7071068, 1e-7);
  const double grid = testing::greens_grid_extrapolated(0.5, 1.0, 0.5, 1.0);
  EXPECT_NEAR(grid / value, 1.0, 1e-6);
}

TEST(GreensConstant, GridOracleInGeneralUnits) {
  for (const double m : {0.3, 1.0, 2.5}) {
    for (const double hbar : {0.6, 1.0, 1.7}) {
      for (const double E : {0.1, 0.6, 0.95}) {
        const ModelParams p{.E = E, .V = 1.0, .m = m, .hbar = hbar};
        const double value = greens_constant(0.0, 0.0, p).value;
        const double grid = testing::greens_grid_extrapolated(E, 1.0, m, hbar);
        EXPECT_NEAR(grid / value, 1.0, 1e-6) << "m=" << m << " hbar=" << hbar << " E=" << E;
      }
    }
  }
}

TEST(GreensConstant, DecaysWithKappa) {
  const ModelParams p{.E = 0.25, .V = 1.0};
  const double kappa = std::sqrt(0.75);
  const double ratio = greens_constant(2.0, 0.0, p).value / greens_constant(0.0, 0.0, p).value;
  EXPECT_NEAR(ratio, std::exp(-2.0 * kappa), 1e-15);
}

TEST(GreensConstant, NegativeBelowThreshold) {
  for (int i = 1; i < 200; ++i) {
    const ModelParams p{.E = i / 200.0, .V = 1.0};
    EXPECT_LT(greens_constant(0.0, 0.3, p).value, 0.0);
  }
}

TEST(GreensConstant, RejectsOpenChannel) {
  EXPECT_THROW((void)greens_constant(0.0, 0.0, {.E = 1.0, .V = 1.0}), DomainError);
  EXPECT_THROW((void)greens_constant(0.0, 0.0, {.E = 0.5, .V = 1.0, .m = 0.0}), DomainError);
}

TEST(EffectiveStrength, Examples) {
  EXPECT_NEAR(effective_strength({.E = 0.5, .V = 1.0, .k0 = 1.0}), 0.7071068, 1e-7);
  EXPECT_EQ(effective_strength({.E = 0.5, .V = 1.0, .k0 = 0.0}), 0.0);
  EXPECT_EQ(effective_strength({.E = 0.3, .V = 2.0, .k0 = 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(effective_strength({.E = 0.75, .V = 1.0, .k0 = 1.0}), 1.0);
}

TEST(EffectiveStrength, MatchesGridOracle) {
  const ModelParams p{.E = 0.75, .V = 1.0, .k0 = 1.0};
  const double grid = testing::greens_grid_extrapolated(0.75, 1.0, 0.5, 1.0);
  EXPECT_NEAR(-p.k0 * p.k0 * grid, effective_strength(p), 1e-6);
}

TEST(EffectiveStrength, StrictlyIncreasingInEnergy) {
  for (const double k0 : {0.1, 1.0, 5.0}) {
    double previous = 0.0;
    for (int i = 1; i < 200; ++i) {
      const double alpha = effective_strength({.E = i / 200.0, .V = 1.0, .k0 = k0});
      EXPECT_GT(alpha, previous);
      previous = alpha;
    }
  }
}

TEST(EffectiveStrength, EndpointLimits) {
  const double V = 1.0, k0 = 1.3;
  const double low_limit = k0 * k0 * std::sqrt(0.5 / 2.0) / std::sqrt(V);
  const double low = effective_strength({.E = 1e-8 * V, .V = V, .k0 = k0});
  EXPECT_NEAR(low / low_limit, 1.0, 1e-6);
  EXPECT_GT(effective_strength({.E = V - 1e-10, .V = V, .k0 = k0}), 1e4);
}

}  // namespace
}  // namespace twostate
