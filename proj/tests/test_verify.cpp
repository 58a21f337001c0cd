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

#include <string>

#include <gtest/gtest.h>

#include "twostate/errors.hpp"
#include "twostate/times.hpp"
#include "twostate/verify.hpp"

namespace twostate {
namespace {

const std::vector<std::string> kChecks{
    "unitarity_grid",   "closed_form_consistency",    "fd_group_delay", "tau_structure",
    "extremum_law",     "regularization_convergence", "dwell_limit",    "taxonomy_identity"};

TEST(Verify, CleanModelPassesEveryCheck) {
  const VerifyReport r = verify();
  for (const auto& name : kChecks) {
    const CheckResult* c = r.find(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_TRUE(c->passed) << name << ": " << c->detail;
  }
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.find("wavepacket_delay"), nullptr);
  EXPECT_EQ(r.find("no_such_check"), nullptr);
}

TEST(Verify, SignFaultIsCaughtByFiniteDifference) {
  const VerifyReport r = verify({.hooks = make_hooks(Fault::TauSign)});
  EXPECT_FALSE(r.all_passed());
  ASSERT_NE(r.find("fd_group_delay"), nullptr);
  EXPECT_FALSE(r.find("fd_group_delay")->passed);
  EXPECT_TRUE(r.find("unitarity_grid")->passed);
}

TEST(Verify, UnitarityFaultIsCaughtOnlyByUnitarity) {
  const VerifyReport r = verify({.hooks = make_hooks(Fault::Unitarity)});
  EXPECT_FALSE(r.find("unitarity_grid")->passed);
  for (const auto& name : kChecks) {
    if (name == "unitarity_grid") continue;
    EXPECT_TRUE(r.find(name)->passed) << name;
  }
}

TEST(Verify, FaultNames) {
  EXPECT_EQ(parse_fault("none"), Fault::None);
  EXPECT_EQ(parse_fault("tau-sign"), Fault::TauSign);
  EXPECT_EQ(parse_fault("unitarity"), Fault::Unitarity);
  EXPECT_THROW((void)parse_fault("sign"), SpecError);
}

TEST(Verify, BrentFindsExtremalCoupling) {
  for (const double eps : {0.6, 0.7, 0.8, 0.9}) {
    const ExtremalCoupling found = maximize_abs_tau(eps, 1.0, 1e-4, 10.0);
    const ExtremalCoupling exact = extremal_coupling(eps, 1.0);
    EXPECT_NEAR(found.k0_sq, exact.k0_sq, 1e-6);
    EXPECT_NEAR(found.tau, exact.tau, 1e-12);
  }
}

}  // namespace
}  // namespace twostate
