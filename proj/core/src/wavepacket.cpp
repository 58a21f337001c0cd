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

#include "twostate/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "twostate/errors.hpp"

namespace twostate {

namespace {

using cplx = std::complex<double>;

constexpr double kEdgeDensityLimit = 1e-8;
constexpr double kNormDriftLimit = 1e-6;
constexpr double kMinTransmittedWeight = 1e-6;
constexpr std::size_t kEdgeProbe = 4;

struct Mat2 {
  cplx a, b, c, d;  // [[a, b], [c, d]]

  [[nodiscard]] Mat2 inverse() const {
    const cplx det = a * d - b * c;
    return {d / det, -b / det, -c / det, a / det};
  }
};

struct Vec2 {
  cplx u, v;
};

inline Vec2 operator*(const Mat2& m, const Vec2& x) {
  return {m.a * x.u + m.b * x.v, m.c * x.u + m.d * x.v};
}

// Two-channel Crank-Nicolson stepper on a uniform grid with Dirichlet ends.
// Unknowns are the N - 2 interior nodes; each node holds (phi1, phi2).
class CrankNicolson {
 public:
  CrankNicolson(const GridSpec& grid, const ModelParams& p, double x_origin,
                std::vector<double> coupling)
      : n_(grid.N - 2),
        dx_(2.0 * grid.L / static_cast<double>(grid.N - 1)),
        x_origin_(x_origin),
        V_(p.V),
        kinetic_(p.hbar * p.hbar / (2.0 * p.m * dx_ * dx_)),
        beta_(grid.dt / (2.0 * p.hbar)),
        coupling_(std::move(coupling)),
        psi_(n_),
        inv_(n_),
        scratch_(n_) {
    // Forward elimination of A = I + i beta H; the off-diagonal blocks are
    // the scalar c = -i beta a times the identity.
    const cplx c = cplx(0.0, -beta_ * kinetic_);
    for (std::size_t j = 0; j < n_; ++j) {
      Mat2 m{cplx(1.0, beta_ * 2.0 * kinetic_), cplx(0.0, beta_ * coupling_[j]),
             cplx(0.0, beta_ * coupling_[j]), cplx(1.0, beta_ * (2.0 * kinetic_ + V_))};
      if (j > 0) {
        const Mat2& prev = inv_[j - 1];
        const cplx c2 = c * c;
        m.a -= c2 * prev.a;
        m.b -= c2 * prev.b;
        m.c -= c2 * prev.c;
        m.d -= c2 * prev.d;
      }
      inv_[j] = m.inverse();
    }
  }

  [[nodiscard]] double dx() const noexcept { return dx_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double x(std::size_t j) const noexcept {
    return x_origin_ + static_cast<double>(j + 1) * dx_;
  }
  [[nodiscard]] const std::vector<Vec2>& state() const noexcept { return psi_; }
  std::vector<Vec2>& state() noexcept { return psi_; }

  void step() {
    const cplx c = cplx(0.0, -beta_ * kinetic_);
    const cplx ib(0.0, beta_);
    // rhs = (I - i beta H) psi, stored in scratch_
    for (std::size_t j = 0; j < n_; ++j) {
      const Vec2 left = j > 0 ? psi_[j - 1] : Vec2{};
      const Vec2 right = j + 1 < n_ ? psi_[j + 1] : Vec2{};
      const Vec2& here = psi_[j];
      const cplx h1 = kinetic_ * (2.0 * here.u - left.u - right.u) + coupling_[j] * here.v;
      const cplx h2 = kinetic_ * (2.0 * here.v - left.v - right.v) + V_ * here.v +
                      coupling_[j] * here.u;
      scratch_[j] = {here.u - ib * h1, here.v - ib * h2};
    }
    // forward sweep: d'_j = M_j^{-1} (b_j - c d'_{j-1})
    for (std::size_t j = 0; j < n_; ++j) {
      Vec2 b = scratch_[j];
      if (j > 0) {
        b.u -= c * scratch_[j - 1].u;
        b.v -= c * scratch_[j - 1].v;
      }
      scratch_[j] = inv_[j] * b;
    }
    // back substitution: x_j = d'_j - c M_j^{-1} x_{j+1}
    psi_[n_ - 1] = scratch_[n_ - 1];
    for (std::size_t j = n_ - 1; j-- > 0;) {
      const Vec2 t = inv_[j] * psi_[j + 1];
      psi_[j] = {scratch_[j].u - c * t.u, scratch_[j].v - c * t.v};
    }
  }

  [[nodiscard]] double norm() const noexcept {
    double s = 0.0;
    for (const auto& v : psi_) s += std::norm(v.u) + std::norm(v.v);
    return s * dx_;
  }

  [[nodiscard]] double edge_density() const noexcept {
    double worst = 0.0;
    const std::size_t probe = std::min(kEdgeProbe, n_);
    for (std::size_t i = 0; i < probe; ++i) {
      for (const std::size_t j : {i, n_ - 1 - i}) {
        worst = std::max(worst, std::norm(psi_[j].u) + std::norm(psi_[j].v));
      }
    }
    return worst;
  }

 private:
  std::size_t n_;
  double dx_;
  double x_origin_;
  double V_;
  double kinetic_;
  double beta_;
  std::vector<double> coupling_;
  std::vector<Vec2> psi_;
  std::vector<Mat2> inv_;
  std::vector<Vec2> scratch_;
};

struct RunOutcome {
  double t_cross = 0.0;
  double transmitted = 0.0;
  double norm_drift = 0.0;
  double edge_density = 0.0;
  std::size_t steps = 0;
};

void check_grid(const GridSpec& grid) {
  if (!(grid.L > 0.0) || grid.N < 8 || !(grid.dt > 0.0) || grid.steps == 0) {
    throw PreconditionError("grid needs L > 0, N >= 8, dt > 0 and steps > 0");
  }
}

// Coupling g = k0 / w averaged over each grid cell, so the integral k0 is
// preserved even when the pulse is narrower than a cell.
std::vector<double> cell_averaged_coupling(const CrankNicolson& cn,
                                           const ModelParams& p, double w) {
  std::vector<double> out(cn.size(), 0.0);
  if (p.k0 == 0.0) return out;
  const double g = p.k0 / w;
  const double lo = p.x_c - 0.5 * w;
  const double hi = p.x_c + 0.5 * w;
  const double h = cn.dx();
  for (std::size_t j = 0; j < cn.size(); ++j) {
    const double a = std::max(cn.x(j) - 0.5 * h, lo);
    const double b = std::min(cn.x(j) + 0.5 * h, hi);
    if (b > a) out[j] = g * (b - a) / h;
  }
  return out;
}

RunOutcome run(const PacketSpec& packet, const ModelParams& p, double w,
               const GridSpec& grid, const SnapshotOptions* snapshots) {
  const double origin = p.x_c - grid.L;
  // Build once without coupling to get the grid geometry, then with it.
  CrankNicolson geometry(grid, p, origin, std::vector<double>(grid.N - 2, 0.0));
  CrankNicolson cn(grid, p, origin, cell_averaged_coupling(geometry, p, w));

  auto& psi = cn.state();
  for (std::size_t j = 0; j < cn.size(); ++j) {
    const double s = cn.x(j) - packet.x0;
    psi[j] = {std::exp(-s * s / (4.0 * packet.sigma * packet.sigma)) *
                  std::polar(1.0, packet.kbar * cn.x(j)),
              0.0};
  }
  const double scale = 1.0 / std::sqrt(cn.norm());
  for (auto& v : psi) v.u *= scale;

  const double detector = p.x_c + 0.5 * grid.L;
  const double past_pulse = p.x_c + std::max(0.5 * w, cn.dx());

  const auto centroid = [&](double& weight) {
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t j = 0; j < cn.size(); ++j) {
      const double x = cn.x(j);
      if (x <= past_pulse) continue;
      const double d = std::norm(psi[j].u);
      m0 += d;
      m1 += d * x;
    }
    weight = m0 * cn.dx();
    return m0 > 0.0 ? m1 / m0 : 0.0;
  };

  const auto dump = [&](double t) {
    if (snapshots == nullptr || snapshots->out == nullptr) return;
    char line[128];
    for (std::size_t j = 0; j < cn.size(); j += std::max<std::size_t>(1, snapshots->point_stride)) {
      std::snprintf(line, sizeof line, "%.15g,%.15g,%.15g,%.15g\n", t, cn.x(j),
                    std::norm(psi[j].u), std::norm(psi[j].v));
      *snapshots->out << line;
    }
  };
  if (snapshots != nullptr && snapshots->out != nullptr) {
    *snapshots->out << "t,x,density1,density2\n";
  }
  const std::size_t stride =
      snapshots != nullptr ? std::max<std::size_t>(1, snapshots->step_stride) : 1;

  RunOutcome outcome;
  double weight = 0.0;
  double previous = centroid(weight);
  dump(0.0);
  for (std::size_t n = 1; n <= grid.steps; ++n) {
    cn.step();
    const double t = static_cast<double>(n) * grid.dt;
    if (n % stride == 0) dump(t);

    outcome.norm_drift = std::max(outcome.norm_drift, std::abs(cn.norm() - 1.0));
    outcome.edge_density = std::max(outcome.edge_density, cn.edge_density());
    if (outcome.edge_density > kEdgeDensityLimit) {
      throw BoundaryError("density " + std::to_string(outcome.edge_density) +
                          " reached the domain edge at t = " + std::to_string(t));
    }
    if (outcome.norm_drift > kNormDriftLimit) {
      throw NormDriftError("norm drifted by " + std::to_string(outcome.norm_drift));
    }

    const double current = centroid(weight);
    if (weight > kMinTransmittedWeight && previous < detector && current >= detector) {
      outcome.t_cross = t - grid.dt * (current - detector) / (current - previous);
      outcome.transmitted = weight;
      outcome.steps = n;
      return outcome;
    }
    previous = current;
  }
  throw PreconditionError("transmitted centroid did not reach the detector within " +
                          std::to_string(grid.steps) + " steps");
}

}  // namespace

double packet_energy(const PacketSpec& packet, const ModelParams& p) noexcept {
  return p.hbar * p.hbar * packet.kbar * packet.kbar / (2.0 * p.m);
}

void validate(const PacketSpec& packet, const ModelParams& p) {
  if (!(packet.sigma > 0.0) || !(packet.kbar > 0.0)) {
    throw PreconditionError("packet needs sigma > 0 and kbar > 0");
  }
  if (!(packet.x0 < p.x_c) || std::abs(packet.x0 - p.x_c) < 5.0 * packet.sigma) {
    throw PreconditionError("packet must start at least 5 sigma left of the coupling");
  }
  const double E0 = packet_energy(packet, p);
  if (!(E0 < p.V)) throw PreconditionError("packet energy must lie below V");
  const double spread = p.hbar * p.hbar * packet.kbar / (p.m * packet.sigma);
  if (spread > 0.1 * std::min(E0, p.V - E0)) {
    throw PreconditionError("packet is not narrow band: energy spread " +
                            std::to_string(spread) + " exceeds 0.1 min(E0, V - E0)");
  }
}

PacketSpec default_packet(const ModelParams& p, double sigma) {
  validate(p);
  return {.x0 = p.x_c - 5.0 * sigma,
          .kbar = std::sqrt(2.0 * p.m * p.E) / p.hbar,
          .sigma = sigma};
}

GridSpec default_grid(const PacketSpec& packet, const ModelParams& p) {
  const double E0 = packet_energy(packet, p);
  const double v = p.hbar * packet.kbar / p.m;
  const double k_max = packet.kbar + 6.0 / (2.0 * packet.sigma);
  const double kappa = std::sqrt(2.0 * p.m * std::max(p.V - E0, 0.0)) / p.hbar;
  const double dx = 0.2 / std::max(k_max, kappa);
  const double start = std::abs(packet.x0 - p.x_c);

  const auto width_at = [&](double t) {
    const double r = p.hbar * t / (2.0 * p.m * packet.sigma * packet.sigma);
    return packet.sigma * std::sqrt(1.0 + r * r);
  };
  double L = std::max(16.0 * packet.sigma, start + 8.0 * packet.sigma);
  for (int it = 0; it < 8; ++it) {
    const double t_end = (0.5 * L + start) / v;
    L = std::max(16.0 * width_at(t_end), start + 8.0 * packet.sigma);
  }
  L = std::ceil(L);

  GridSpec grid;
  grid.L = L;
  grid.N = std::max<std::size_t>(2048, static_cast<std::size_t>(std::ceil(2.0 * L / dx)) + 1);
  grid.dt = std::min(1.0, 0.1 * p.hbar / E0);
  grid.steps = static_cast<std::size_t>(std::ceil(1.5 * (0.5 * L + start) / v / grid.dt));
  return grid;
}

DelayResult propagate(const PacketSpec& packet, const ModelParams& p, double w,
                      const GridSpec& grid, const SnapshotOptions& snapshots) {
  if (!(p.m > 0.0) || !(p.hbar > 0.0) || !(p.k0 >= 0.0) || !(p.V > 0.0)) {
    throw DomainError("invalid model parameters for propagation");
  }
  validate(packet, p);
  check_grid(grid);
  if (!(w > 0.0) || w > 1e-2) {
    throw PreconditionError("coupling width must satisfy 0 < w <= 1e-2");
  }

  const RunOutcome coupled = run(packet, p, w, grid, &snapshots);
  ModelParams free = p;
  free.k0 = 0.0;
  const RunOutcome reference = run(packet, free, w, grid, nullptr);

  DelayResult out;
  out.t_arrival = coupled.t_cross;
  out.t_free = reference.t_cross;
  out.delay = coupled.t_cross - reference.t_cross;
  out.norm_drift = std::max(coupled.norm_drift, reference.norm_drift);
  out.transmitted_fraction = coupled.transmitted;
  out.max_edge_density = std::max(coupled.edge_density, reference.edge_density);
  out.steps_taken = coupled.steps;
  return out;
}

}  // namespace twostate
