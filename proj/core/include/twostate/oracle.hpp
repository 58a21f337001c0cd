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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "twostate/params.hpp"
#include "twostate/scatter.hpp"

namespace twostate {

/// hbar * (phi_t(E + h) - phi_t(E - h)) / (2h).
///
/// Requires 0 < h < min(E, V - E) / 10 (PreconditionError) and k0 > 0.
[[nodiscard]] double fd_group_delay(const ModelParams& p, double h);

/// Default finite-difference step, 1e-6 * V.
[[nodiscard]] inline double default_fd_step(const ModelParams& p) noexcept {
  return 1e-6 * p.V;
}

struct ChannelValues {
  cplx phi1{};
  cplx phi2{};
};

/// Exact two-channel solution for the coupling k0 delta(x - x_c) replaced by a
/// square pulse of height k0 / w on [x_c - w/2, x_c + w/2].
///
/// Outside the pulse, with s = x - x_c and an overall factor e^{ik x_c}:
///   phi1 = e^{iks} + B0 e^{-iks},  phi2 = D_L e^{kappa s}    (left)
///   phi1 = C e^{iks},              phi2 = D_R e^{-kappa s}   (right)
/// B is reported as B0 e^{2ik x_c}, the same convention as Amplitudes, so
/// it is directly comparable with solve_amplitudes(). Inside, the potential
/// matrix [[0, g], [g, V]] is diagonal in its eigenbasis; each eigen-channel
/// carries the waves e^{iq(s + w/2)} and e^{-iq(s - w/2)}, with coefficients
/// in `interior` ordered (a_low, b_low, a_high, b_high).
class RegularizedSolution {
 public:
  double w = 0.0;
  cplx B{};
  cplx C{};
  cplx D_L{};
  cplx D_R{};
  std::array<cplx, 4> interior{};
  double residual = 0.0;  ///< max |defect| over the eight matching conditions
  double rcond = 0.0;     ///< reciprocal condition estimate of the matching matrix

  /// Both channel components at position x (absolute coordinate).
  [[nodiscard]] ChannelValues at(double x) const;

  // Interior eigen-structure, filled in by solve_regularized.
  struct EigenChannel {
    double lambda = 0.0;       ///< eigenvalue of the potential matrix
    double v1 = 0.0, v2 = 0.0; ///< normalized eigenvector
    cplx q{};                  ///< local wavenumber, Im q >= 0
  };
  std::array<EigenChannel, 2> eigen{};
  double k = 0.0;
  double kappa = 0.0;
  double x_c = 0.0;
};

/// Solves the 8x8 matching system with partially pivoted LU. k0 == 0 is
/// accepted and gives the decoupled solution B = 0, C = 1, D = 0. Throws
/// NumericalError when the system is numerically singular.
[[nodiscard]] RegularizedSolution solve_regularized(const ModelParams& p,
                                                    double w);

struct ConvergenceReport {
  std::vector<double> widths;
  std::vector<double> errors;  ///< |B_w - B| + |C_w - C| against the delta limit
  /// Least-squares slope of log(error) against log(w); empty when every error
  /// is at round-off level (decoupled case, exact at any width).
  std::optional<double> observed_order;
  cplx B_extrapolated{};  ///< linear extrapolation to w = 0 from the two smallest widths
  cplx C_extrapolated{};
  double extrapolated_error = 0.0;
  double max_residual = 0.0;
};

/// Requires at least three strictly decreasing positive widths.
[[nodiscard]] ConvergenceReport convergence_study(const ModelParams& p,
                                                  std::span<const double> widths);

/// Default widths {1e-1, 1e-2, 1e-3}.
[[nodiscard]] std::vector<double> default_widths();

/// (m / hbar k) * integral over the pulse of |phi1|^2 + |phi2|^2, by adaptive
/// Gauss-Kronrod quadrature on the regularized solution.
[[nodiscard]] double dwell_time_regularized(const ModelParams& p, double w);

/// Closed-channel probability outside the pulse per unit incident flux.
/// Diagnostic only: it tends to a finite constant as w -> 0.
[[nodiscard]] double exterior_closed_channel_time(const ModelParams& p,
                                                  double w);

}  // namespace twostate
