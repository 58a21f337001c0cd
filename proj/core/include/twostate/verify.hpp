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

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "twostate/params.hpp"
#include "twostate/scatter.hpp"
#include "twostate/times.hpp"

namespace twostate {

/// Model entry points exercised by verify(). The independent oracles
/// (finite differences, regularized solver, reduced closed forms) are never
/// routed through these, so a fault injected here is caught by them.
struct ModelHooks {
  std::function<Amplitudes(const ModelParams&)> amplitudes;
  std::function<GroupDelays(const ModelParams&)> group_delays;
};

enum class Fault {
  None,
  TauSign,    ///< negate the closed-form group delay
  Unitarity,  ///< add 1e-6 to |T|^2
};

[[nodiscard]] Fault parse_fault(std::string_view name);
[[nodiscard]] ModelHooks make_hooks(Fault fault = Fault::None);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< measured values, human readable
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const noexcept;
  [[nodiscard]] const CheckResult* find(std::string_view name) const noexcept;
};

struct VerifyOptions {
  ModelHooks hooks = make_hooks();
  bool include_wavepacket = false;  ///< adds the slow time-domain check
};

/// Runs the oracle suite. Check names:
///   unitarity_grid, closed_form_consistency, fd_group_delay, tau_structure,
///   extremum_law, regularization_convergence, dwell_limit,
///   taxonomy_identity, and optionally wavepacket_delay.
[[nodiscard]] VerifyReport verify(const VerifyOptions& options = {});

/// Maximizes |tau| over k0^2 in [lo, hi] for fixed (epsilon, V) with Brent's
/// method on the reduced closed form. Returns {k0_sq, tau}.
[[nodiscard]] ExtremalCoupling maximize_abs_tau(double epsilon, double V,
                                                double lo, double hi);

}  // namespace twostate
