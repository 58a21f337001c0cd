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

#include <cstddef>
#include <ostream>

#include "twostate/params.hpp"

namespace twostate {

/// Gaussian packet psi ~ exp(-(x - x0)^2 / (4 sigma^2) + i kbar x), so that
/// sigma is the standard deviation of the density.
struct PacketSpec {
  double x0 = -500.0;
  double kbar = 0.5;
  double sigma = 100.0;
};

struct GridSpec {
  double L = 1600.0;        ///< domain is [x_c - L, x_c + L]
  std::size_t N = 16001;    ///< grid points, including both Dirichlet ends
  double dt = 0.4;
  std::size_t steps = 5000; ///< step budget; the run stops at detector crossing
};

struct DelayResult {
  double t_arrival = 0.0;  ///< transmitted centroid reaches x_c + L/2
  double t_free = 0.0;     ///< same for the uncoupled reference run
  double delay = 0.0;      ///< t_arrival - t_free
  double norm_drift = 0.0; ///< max |norm - 1| over both runs
  double transmitted_fraction = 0.0;  ///< open-channel weight past the pulse at t_arrival
  double max_edge_density = 0.0;
  std::size_t steps_taken = 0;
};

/// Optional CSV dump of (t, x, |phi1|^2, |phi2|^2) from the coupled run.
struct SnapshotOptions {
  std::ostream* out = nullptr;
  std::size_t step_stride = 100;
  std::size_t point_stride = 10;
};

/// Mean energy hbar^2 kbar^2 / (2m).
[[nodiscard]] double packet_energy(const PacketSpec& packet,
                                   const ModelParams& p) noexcept;

/// Throws PreconditionError unless |x0| >= 5 sigma, x0 < x_c, the packet is
/// narrow band (hbar^2 kbar / (m sigma) <= 0.1 min(E0, V - E0)) and E0 < V.
void validate(const PacketSpec& packet, const ModelParams& p);

/// Narrow-band packet at energy p.E starting 5 sigma left of the coupling.
[[nodiscard]] PacketSpec default_packet(const ModelParams& p,
                                        double sigma = 100.0);

/// Grid sized so both scattered packets stay >= 8 widths from the edges and
/// both k and kappa are resolved to k dx <= 0.2.
[[nodiscard]] GridSpec default_grid(const PacketSpec& packet,
                                    const ModelParams& p);

/// Crank-Nicolson evolution of the two-channel system with the square
/// coupling of width w (cell-averaged onto the grid), plus a free reference
/// run on the same grid. p.E is not used; the packet sets the energy.
///
/// Throws BoundaryError if edge density exceeds 1e-8, NormDriftError if the
/// norm drifts by more than 1e-6, PreconditionError if the detector is not
/// reached within grid.steps.
[[nodiscard]] DelayResult propagate(const PacketSpec& packet,
                                    const ModelParams& p, double w,
                                    const GridSpec& grid,
                                    const SnapshotOptions& snapshots = {});

}  // namespace twostate
