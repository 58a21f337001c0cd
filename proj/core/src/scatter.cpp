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

#include "twostate/scatter.hpp"

#include <cmath>
#include <limits>

#include "twostate/errors.hpp"
#include "twostate/greens.hpp"

namespace twostate {

namespace {

constexpr double kMatchingTolerance = 1e-12;

// m k0^2 G(x_c, x_c | E), shared by the amplitude and phase formulas.
double coupling_term(const ModelParams& p) {
  return p.m * p.k0 * p.k0 * greens_constant(p.x_c, p.x_c, p).value;
}

}  // namespace

Amplitudes solve_amplitudes(const ModelParams& p) {
  const double k = wave_numbers(p).k;
  const double lambda = p.k0 * p.k0 * greens_constant(p.x_c, p.x_c, p).value;
  const double a = p.m * lambda / (p.hbar * p.hbar * k);

  Amplitudes out;
  out.C = 1.0 / cplx(1.0, a);
  out.B = out.C - 1.0;

  // Continuity and the derivative jump phi'(0+) - phi'(0-) = (2m/hbar^2) lambda phi(0),
  // in the frame centred on the coupling.
  const cplx ik(0.0, k);
  const double continuity = std::abs(1.0 + out.B - out.C);
  const double jump = std::abs(ik * out.C - ik * (1.0 - out.B) -
                               2.0 * p.m * lambda / (p.hbar * p.hbar) * out.C);
  if (continuity > kMatchingTolerance || jump > kMatchingTolerance * (1.0 + k)) {
    throw NumericalError("matching conditions violated: continuity " +
                         std::to_string(continuity) + ", jump " +
                         std::to_string(jump));
  }

  const double open = p.hbar * p.hbar * k;
  const double coupling = p.m * lambda;
  const double denom = open * open + coupling * coupling;
  out.T2 = open * open / denom;
  out.R2 = coupling * coupling / denom;
  out.phi_t = std::atan(-coupling / open);
  out.phi_r = p.k0 > 0.0 ? std::atan(open / coupling)
                         : std::numeric_limits<double>::quiet_NaN();

  if (p.x_c != 0.0) {
    out.B *= std::polar(1.0, 2.0 * k * p.x_c);
  }
  return out;
}

double transmission_probability(const ReducedParams& r) {
  validate(r);
  const double k0_4 = r.k0 * r.k0 * r.k0 * r.k0;
  return 1.0 / (1.0 + k0_4 / (16.0 * r.V * r.V * r.epsilon * (1.0 - r.epsilon)));
}

Phases scattering_phases(const ModelParams& p) {
  const double k = wave_numbers(p).k;
  if (p.k0 == 0.0) {
    throw DegenerateError("reflection phase is undefined for k0 = 0");
  }
  const double open = p.hbar * p.hbar * k;
  const double coupling = coupling_term(p);
  return {.phi_t = std::atan(-coupling / open), .phi_r = std::atan(open / coupling)};
}

}  // namespace twostate
