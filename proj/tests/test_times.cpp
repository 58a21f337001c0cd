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
#include <limits>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "twostate/errors.hpp"
#include "twostate/scatter.hpp"
#include "twostate/times.hpp"

namespace twostate {
namespace {

double tau_reduced(double eps, double V, double k0) {
  return transition_time(ReducedParams{.epsilon = eps, .V = V, .k0 = k0});
}

// Phase of C from solve_amplitudes, differentiated numerically. Does not go
// through scattering_phases or fd_group_delay.
double phase_derivative(const ModelParams& p, double h) {
  ModelParams lo = p, hi = p;
  lo.E -= h;
  hi.E += h;
  return p.hbar * (std::arg(solve_amplitudes(hi).C) - std::arg(solve_amplitudes(lo).C)) / (2 * h);
}

TEST(GroupDelays, Examples) {
  const GroupDelays mid = group_delays({.E = 0.5, .V = 1.0, .k0 = 1.0});
  EXPECT_EQ(mid.tau_gt, 0.0);
  EXPECT_EQ(mid.tau_gr, 0.0);
  EXPECT_EQ(mid.tau_g, 0.0);

  const GroupDelays low = group_delays({.E = 0.25, .V = 1.0, .k0 = 1.0});
  EXPECT_NEAR(low.tau_gt, -0.5773503, 1e-7);
  EXPECT_NEAR(low.tau_gt, -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(low.tau_gr, low.tau_gt);
  EXPECT_NEAR(low.tau_g, low.tau_gt, 1e-15);

  const GroupDelays high = group_delays({.E = 0.75, .V = 1.0, .k0 = 1.0});
  EXPECT_NEAR(high.tau_gt, 0.5773503, 1e-7);
  EXPECT_NEAR(high.tau_gt, -low.tau_gt, 1e-15);
}

TEST(GroupDelays, MatchesNumericalPhaseDerivative) {
  testing::ParamGenerator gen(31);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p{.E = gen.uniform(0.05, 0.95), .V = 1.0, .k0 = gen.log_uniform(0.1, 3.0),
                        .m = gen.log_uniform(0.3, 3.0), .hbar = gen.log_uniform(0.5, 2.0)};
    const double fd = phase_derivative(p, 1e-5);
    EXPECT_NEAR(group_delays(p).tau_gt, fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(GroupDelays, SecondOrderConvergenceOfPhaseDerivative) {
  const ModelParams p{.E = 0.25, .V = 1.0, .k0 = 1.0};
  const double analytic = group_delays(p).tau_gt;
  const double e1 = std::abs(phase_derivative(p, 1e-3) - analytic);
  const double e2 = std::abs(phase_derivative(p, 5e-4) - analytic);
  EXPECT_GE(e1 / e2, 3.5);
  EXPECT_LE(e1 / e2, 4.5);
}

TEST(GroupDelays, RequireCoupling) {
  EXPECT_THROW((void)group_delays({.E = 0.5, .V = 1.0, .k0 = 0.0}), DegenerateError);
  EXPECT_THROW((void)group_delays({.E = 1.5, .V = 1.0, .k0 = 1.0}), DomainError);
}

TEST(TransitionTime, ReducedExamples) {
  EXPECT_EQ(tau_reduced(0.5, 1.0, 1.0), 0.0);
  EXPECT_NEAR(tau_reduced(0.25, 1.0, 1.0), -0.5773503, 1e-7);
  EXPECT_NEAR(tau_reduced(0.25, 1.0, 1.0), -1.0 / std::sqrt(3.0), 1e-15);
  const double k0_sq = 4.0 * std::sqrt(0.75 * 0.25);
  EXPECT_NEAR(k0_sq, 1.7320508, 1e-7);
  EXPECT_NEAR(tau_reduced(0.75, 1.0, std::sqrt(k0_sq)), 2.0 / 3.0, 1e-12);
}

TEST(TransitionTime, ReducedErrors) {
  EXPECT_THROW((void)tau_reduced(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW((void)tau_reduced(1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW((void)tau_reduced(0.3, 1.0, 0.0), DegenerateError);
}

TEST(TransitionTime, ThreeFormsAgree) {
  testing::ParamGenerator gen(32);
  for (int i = 0; i < 5000; ++i) {
    const ReducedParams r{.epsilon = gen.uniform(1e-4, 1.0 - 1e-4), .V = gen.log_uniform(0.1, 10.0),
                          .k0 = gen.log_uniform(1e-2, 10.0)};
    const double reduced = transition_time(r);
    if (std::abs(reduced) <= 1e-9) continue;
    const ModelParams p = expand(r);
    EXPECT_NEAR(group_delays(p).tau_gt / reduced, 1.0, 1e-12);
    EXPECT_NEAR(transition_time(p) / reduced, 1.0, 1e-12);
  }
}

TEST(TransitionTime, FullUnitFormsAgreeOutsideReducedConvention) {
  testing::ParamGenerator gen(33);
  for (int i = 0; i < 2000; ++i) {
    const ModelParams p{.E = gen.uniform(0.01, 0.99), .V = 1.0, .k0 = gen.log_uniform(0.05, 5.0),
                        .m = gen.log_uniform(0.2, 5.0), .hbar = gen.log_uniform(0.2, 5.0)};
    const double a = group_delays(p).tau_gt;
    if (std::abs(a) <= 1e-9) continue;
    EXPECT_NEAR(transition_time(p) / a, 1.0, 1e-12);
  }
}

TEST(TransitionTime, SignLaw) {
  for (const double V : {0.5, 1.0, 3.0}) {
    for (const double k0 : {0.1, 1.0, 4.0}) {
      for (int i = 1; i <= 999; ++i) {
        const double eps = i / 1000.0;
        const double tau = tau_reduced(eps, V, k0);
        if (i == 500) {
          EXPECT_EQ(tau, 0.0);
        } else if (i < 500) {
          EXPECT_LT(tau, 0.0);
        } else {
          EXPECT_GT(tau, 0.0);
        }
      }
    }
  }
}

TEST(TransitionTime, Antisymmetry) {
  testing::ParamGenerator gen(34);
  for (int i = 0; i < 5000; ++i) {
    const double eps = gen.uniform(1e-3, 0.5);
    const double V = gen.log_uniform(0.1, 10.0);
    const double k0 = gen.log_uniform(0.05, 5.0);
    const double a = tau_reduced(eps, V, k0);
    const double b = tau_reduced(1.0 - eps, V, k0);
    EXPECT_NEAR(a + b, 0.0, 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST(TransitionTime, DivergesAtEndpoints) {
  EXPECT_LT(tau_reduced(1e-6, 1.0, 1.0), -1e2);
  EXPECT_GT(tau_reduced(1.0 - 1e-6, 1.0, 1.0), 1e2);
}

TEST(TimeTaxonomy, QuarterEnergy) {
  const TimeTaxonomy t = time_taxonomy({.E = 0.25, .V = 1.0, .k0 = 1.0});
  EXPECT_EQ(t.tau_d, 0.0);
  EXPECT_EQ(t.tau_a, 0.0);
  EXPECT_NEAR(t.tau_g, -0.5774, 1e-4);
  EXPECT_NEAR(t.tau_i, -0.5774, 1e-4);
  EXPECT_EQ(t.tau_i, t.tau_g);
  EXPECT_NEAR(t.tau, t.tau_gt, 1e-15);
}

TEST(TimeTaxonomy, SymmetricPoint) {
  const TimeTaxonomy t = time_taxonomy({.E = 0.5, .V = 1.0, .k0 = 1.0});
  EXPECT_EQ(t.tau_g, 0.0);
  EXPECT_EQ(t.tau_i, 0.0);
  EXPECT_EQ(t.tau, 0.0);
  EXPECT_EQ(t.tau_d, 0.0);
  EXPECT_EQ(t.tau_a, 0.0);
}

TEST(TimeTaxonomy, IdentityHoldsExactly) {
  testing::ParamGenerator gen(35);
  for (int i = 0; i < 2000; ++i) {
    const TimeTaxonomy t = time_taxonomy({.E = gen.uniform(0.01, 0.99), .V = 1.0,
                                          .k0 = gen.log_uniform(0.01, 10.0)});
    EXPECT_EQ(t.tau_d - (t.tau_a + t.tau_g - t.tau_i), 0.0);
    EXPECT_EQ(t.tau_gt, t.tau_gr);
    EXPECT_NEAR(t.tau_g, t.tau_gt, 1e-15 * std::max(1.0, std::abs(t.tau_gt)));
  }
}

TEST(ExtremalCoupling, Examples) {
  const ExtremalCoupling hi = extremal_coupling(0.75, 1.0);
  EXPECT_NEAR(hi.k0_sq, 1.7320508, 1e-7);
  EXPECT_NEAR(hi.tau, 0.6666667, 1e-7);
  const ExtremalCoupling lo = extremal_coupling(0.25, 1.0);
  EXPECT_NEAR(lo.k0_sq, 1.7320508, 1e-7);
  EXPECT_NEAR(lo.tau, -0.6666667, 1e-7);
  EXPECT_THROW((void)extremal_coupling(0.5, 1.0), DegenerateError);
  EXPECT_THROW((void)extremal_coupling(1.2, 1.0), DomainError);
}

TEST(ExtremalCoupling, DenseScanFindsNoLargerMagnitude) {
  for (const double eps : {0.1, 0.25, 0.4, 0.6, 0.75, 0.9}) {
    for (const double V : {0.5, 1.0, 2.0}) {
      const ExtremalCoupling star = extremal_coupling(eps, V);
      EXPECT_NEAR(tau_reduced(eps, V, std::sqrt(star.k0_sq)), star.tau, 1e-12);
      double best = 0.0;
      double best_k0_sq = 0.0;
      constexpr int kSamples = 200000;
      for (int i = 1; i <= kSamples; ++i) {
        const double k0_sq = 1e-3 * std::pow(1e5, static_cast<double>(i) / kSamples);
        const double tau = std::abs(tau_reduced(eps, V, std::sqrt(k0_sq)));
        if (tau > best) {
          best = tau;
          best_k0_sq = k0_sq;
        }
      }
      EXPECT_LE(best, std::abs(star.tau) * (1.0 + 1e-12));
      EXPECT_NEAR(best_k0_sq / star.k0_sq, 1.0, 1e-4);
    }
  }
}

TEST(ExtremalCoupling, TauVanishesAtCouplingExtremes) {
  for (const double eps : {0.2, 0.7}) {
    EXPECT_LT(std::abs(tau_reduced(eps, 1.0, 1e-4)), 1e-6);
    EXPECT_LT(std::abs(tau_reduced(eps, 1.0, 1e4)), 1e-6);
  }
}

}  // namespace
}  // namespace twostate
