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

// Parameter types and unit conventions shared by the whole library.
//
// All quantities are in atomic units. The open channel sits at potential 0,
// the closed channel at the constant potential V, and the two are coupled by
// k0 * delta(x - x_c).

namespace twostate {

struct ModelParams {
  double E = 0.0;     ///< incident energy
  double V = 1.0;     ///< closed-channel potential, must exceed E
  double k0 = 0.0;    ///< coupling strength (energy x length)
  double m = 0.5;     ///< mass; 2m = 1 by default
  double hbar = 1.0;
  double x_c = 0.0;   ///< coupling location
};

/// Dimensionless parameterization used with hbar = 1, 2m = 1.
struct ReducedParams {
  double epsilon = 0.5;  ///< E / V, in (0, 1)
  double V = 1.0;
  double k0 = 0.0;
};

struct WaveNumbers {
  double k = 0.0;      ///< open-channel wavenumber sqrt(2mE)/hbar
  double kappa = 0.0;  ///< closed-channel decay constant sqrt(2m(V-E))/hbar
};

/// Throws DomainError unless 0 < E < V, k0 >= 0, m > 0, hbar > 0 and all
/// fields are finite.
void validate(const ModelParams& p);

/// Throws DomainError unless 0 < epsilon < 1, V > 0, k0 >= 0.
void validate(const ReducedParams& r);

/// True when hbar == 1 and m == 1/2 exactly.
[[nodiscard]] bool is_reduced_convention(const ModelParams& p) noexcept;

/// epsilon = E / V. Requires the reduced convention (ConventionError).
[[nodiscard]] ReducedParams make_reduced(const ModelParams& p);

/// Inverse of make_reduced: E = epsilon * V with hbar = 1, m = 1/2, x_c = 0.
[[nodiscard]] ModelParams expand(const ReducedParams& r);

[[nodiscard]] WaveNumbers wave_numbers(const ModelParams& p);

}  // namespace twostate
