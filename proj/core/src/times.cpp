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

#include "twostate/times.hpp"

#include <cmath>

#include "twostate/errors.hpp"
#include "twostate/greens.hpp"
#include "twostate/scatter.hpp"

namespace twostate {

namespace {

void require_coupling(double k0) {
  if (k0 == 0.0) {
    throw DegenerateError("transition time needs a nonzero coupling k0");
  }
}

}  // namespace

GroupDelays group_delays(const ModelParams& p) {
  validate(p);
  require_coupling(p.k0);
  const double E = p.E;
  const double V = p.V;
  const double h2 = p.hbar * p.hbar;
  const double k0_sq = p.k0 * p.k0;

  const double numerator = p.m * h2 * p.hbar * k0_sq * (2.0 * E - V);
  const double denominator = std::sqrt(E) * std::sqrt(V - E) *
                             (4.0 * h2 * h2 * E * (V - E) + k0_sq * k0_sq * p.m * p.m);
  const double tau_gt = numerator / denominator;
  // phi_r = phi_t - pi/2 on the principal branch, so the delays coincide.
  const double tau_gr = tau_gt;

  const Amplitudes amp = solve_amplitudes(p);
  return {.tau_gt = tau_gt, .tau_gr = tau_gr, .tau_g = amp.T2 * tau_gt + amp.R2 * tau_gr};
}

double transition_time(const ModelParams& p) {
  validate(p);
  require_coupling(p.k0);
  const double alpha = effective_strength(p);
  const double k = wave_numbers(p).k;
  const double u = p.m * alpha / (p.hbar * p.hbar * k);
  return p.hbar * u * (2.0 * p.E - p.V) /
         (2.0 * p.E * (p.V - p.E) * (1.0 + u * u));
}

double transition_time(const ReducedParams& r) {
  validate(r);
  require_coupling(r.k0);
  const double eps = r.epsilon;
  const double k0_sq = r.k0 * r.k0;
  const double v_over_k0 = r.V / r.k0;
  return 2.0 * (2.0 * eps - 1.0) /
         (std::sqrt(eps) * std::sqrt(1.0 - eps) *
          (k0_sq + 16.0 * eps * (1.0 - eps) * v_over_k0 * v_over_k0));
}

TimeTaxonomy time_taxonomy(const ModelParams& p) {
  const GroupDelays delays = group_delays(p);
  TimeTaxonomy t;
  t.tau_d = 0.0;
  t.tau_a = 0.0;  // no imaginary potential
  t.tau_gt = delays.tau_gt;
  t.tau_gr = delays.tau_gr;
  t.tau_g = delays.tau_g;
  t.tau_i = t.tau_a + t.tau_g - t.tau_d;
  t.tau = transition_time(p);
  if (t.tau_d - (t.tau_a + t.tau_g - t.tau_i) != 0.0) {
    throw NumericalError("taxonomy identity tau_d = tau_a + tau_g - tau_i violated");
  }
  return t;
}

ExtremalCoupling extremal_coupling(double epsilon, double V) {
  validate(ReducedParams{.epsilon = epsilon, .V = V, .k0 = 0.0});
  if (epsilon == 0.5) {
    throw DegenerateError("tau vanishes for every coupling at epsilon = 1/2");
  }
  const double s = epsilon * (1.0 - epsilon);
  return {.k0_sq = 4.0 * V * std::sqrt(s),
          .tau = (2.0 * epsilon - 1.0) / (4.0 * V * s)};
}

}  // namespace twostate
