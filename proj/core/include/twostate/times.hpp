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

#include "twostate/params.hpp"

namespace twostate {

/// Tunneling-time taxonomy. The identity tau_d = tau_a + tau_g - tau_i holds
/// exactly for every value returned by time_taxonomy().
struct TimeTaxonomy {
  double tau_d = 0.0;   ///< dwell
  double tau_a = 0.0;   ///< absorption
  double tau_g = 0.0;   ///< bidirectional group delay
  double tau_i = 0.0;   ///< self-interaction
  double tau_gt = 0.0;  ///< transmission group delay
  double tau_gr = 0.0;  ///< reflection group delay
  double tau = 0.0;     ///< transition time
};

struct GroupDelays {
  double tau_gt = 0.0;
  double tau_gr = 0.0;
  double tau_g = 0.0;  ///< |T|^2 tau_gt + |R|^2 tau_gr
};

/// Closed-form transmission/reflection group delays hbar dphi/dE in full
/// units. Requires k0 > 0 (DegenerateError otherwise).
[[nodiscard]] GroupDelays group_delays(const ModelParams& p);

/// Transition time in full units, evaluated through alpha and k:
/// tau = hbar u (2E - V) / (2 E (V - E) (1 + u^2)) with u = m alpha / (hbar^2 k).
/// Algebraically identical to group_delays().tau_gt but computed along a
/// different route so the two can check each other.
[[nodiscard]] double transition_time(const ModelParams& p);

/// Transition time in reduced units (hbar = 1, 2m = 1):
/// tau = 2 (2 eps - 1) / (sqrt(eps) sqrt(1 - eps) (k0^2 + 16 eps (1 - eps) V^2 / k0^2)).
[[nodiscard]] double transition_time(const ReducedParams& r);

/// Full taxonomy for the delta coupling: tau_d = tau_a = 0 and
/// tau_i = tau_g = tau_gt = tau_gr = tau.
[[nodiscard]] TimeTaxonomy time_taxonomy(const ModelParams& p);

struct ExtremalCoupling {
  double k0_sq = 0.0;  ///< 4 V sqrt(eps (1 - eps))
  double tau = 0.0;    ///< (2 eps - 1) / (4 V eps (1 - eps)); signed
};

/// Coupling at which |tau| is largest for fixed (eps, V): a maximum of tau
/// for eps > 1/2 and a minimum for eps < 1/2. Throws DegenerateError at
/// eps == 1/2, where tau vanishes for every coupling.
[[nodiscard]] ExtremalCoupling extremal_coupling(double epsilon, double V);

}  // namespace twostate
