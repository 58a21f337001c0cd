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

#include <complex>

#include "twostate/params.hpp"

namespace twostate {

using cplx = std::complex<double>;

/// Open-channel scattering data for unit-amplitude incidence from the left.
///
/// Left of the coupling phi1 = e^{ikx} + B e^{-ikx}, right of it
/// phi1 = C e^{ikx}. The phases are the principal-branch arctangents
/// referenced to the coupling point, so they do not depend on x_c.
struct Amplitudes {
  cplx B{0.0, 0.0};
  cplx C{1.0, 0.0};
  double T2 = 1.0;
  double R2 = 0.0;
  double phi_t = 0.0;  ///< in (0, pi/2) for k0 > 0
  double phi_r = 0.0;  ///< in (-pi/2, 0) for k0 > 0; NaN when k0 == 0
};

struct Phases {
  double phi_t = 0.0;
  double phi_r = 0.0;
};

/// Solves continuity and the derivative jump at the coupling point for the
/// effective delta strength -alpha. k0 == 0 is accepted (free propagation).
[[nodiscard]] Amplitudes solve_amplitudes(const ModelParams& p);

/// |T|^2 in reduced units: 1 / (1 + k0^4 / (16 V^2 eps (1 - eps))).
[[nodiscard]] double transmission_probability(const ReducedParams& r);

/// Transmission and reflection phases. Throws DegenerateError for k0 == 0,
/// where the reflection phase is undefined.
[[nodiscard]] Phases scattering_phases(const ModelParams& p);

}  // namespace twostate
