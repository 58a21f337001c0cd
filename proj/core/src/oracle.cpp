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

#include "twostate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "twostate/errors.hpp"
#include "twostate/scatter.hpp"

namespace twostate {

namespace {

constexpr double kMinRcond = 1e-13;
constexpr double kExactThreshold = 1e-12;

using Matrix8 = Eigen::Matrix<cplx, 8, 8>;
using Vector8 = Eigen::Matrix<cplx, 8, 1>;

const cplx I{0.0, 1.0};

}  // namespace

double fd_group_delay(const ModelParams& p, double h) {
  validate(p);
  if (p.k0 == 0.0) throw DegenerateError("finite-difference delay needs k0 > 0");
  const double limit = std::min(p.E, p.V - p.E) / 10.0;
  if (!(h > 0.0) || !(h < limit)) {
    throw PreconditionError("finite-difference step must satisfy 0 < h < " +
                            std::to_string(limit) + ", got " + std::to_string(h));
  }
  ModelParams lo = p;
  ModelParams hi = p;
  lo.E = p.E - h;
  hi.E = p.E + h;
  if (!(lo.E > 0.0) || !(hi.E < p.V)) {
    throw DomainError("finite-difference stencil leaves (0, V)");
  }
  return p.hbar * (scattering_phases(hi).phi_t - scattering_phases(lo).phi_t) / (2.0 * h);
}

ChannelValues RegularizedSolution::at(double x) const {
  const double s = x - x_c;
  const double half = 0.5 * w;
  const cplx frame = std::polar(1.0, k * x_c);
  const cplx B0 = B * std::polar(1.0, -2.0 * k * x_c);
  ChannelValues out;
  if (s < -half) {
    out.phi1 = std::polar(1.0, k * s) + B0 * std::polar(1.0, -k * s);
    out.phi2 = D_L * std::exp(kappa * s);
  } else if (s > half) {
    out.phi1 = C * std::polar(1.0, k * s);
    out.phi2 = D_R * std::exp(-kappa * s);
  } else {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& ch = eigen[j];
      const cplx wave = interior[2 * j] * std::exp(I * ch.q * (s + half)) +
                        interior[2 * j + 1] * std::exp(-I * ch.q * (s - half));
      out.phi1 += ch.v1 * wave;
      out.phi2 += ch.v2 * wave;
    }
  }
  out.phi1 *= frame;
  out.phi2 *= frame;
  return out;
}

RegularizedSolution solve_regularized(const ModelParams& p, double w) {
  validate(p);
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw PreconditionError("regularization width must be positive");
  }
  const auto [k, kappa] = wave_numbers(p);
  const double g = p.k0 / w;

  Eigen::Matrix2d potential;
  potential << 0.0, g, g, p.V;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(potential);

  RegularizedSolution sol;
  sol.w = w;
  sol.k = k;
  sol.kappa = kappa;
  sol.x_c = p.x_c;
  for (int j = 0; j < 2; ++j) {
    auto& ch = sol.eigen[static_cast<std::size_t>(j)];
    ch.lambda = es.eigenvalues()(j);
    ch.v1 = es.eigenvectors()(0, j);
    ch.v2 = es.eigenvectors()(1, j);
    // Principal root keeps Im q >= 0, so both interior waves are bounded by 1.
    ch.q = std::sqrt(cplx(2.0 * p.m * (p.E - ch.lambda), 0.0)) / p.hbar;
  }

  const double xl = -0.5 * w;
  const double xr = 0.5 * w;
  const cplx ik = I * k;

  // Unknowns: B0, C, D_L, D_R, a_low, b_low, a_high, b_high.
  Matrix8 A = Matrix8::Zero();
  Vector8 rhs = Vector8::Zero();
  for (int j = 0; j < 2; ++j) {
    const auto& ch = sol.eigen[static_cast<std::size_t>(j)];
    const int ca = 4 + 2 * j;
    const int cb = ca + 1;
    const cplx iq = I * ch.q;
    const cplx fa_l = std::exp(iq * (xl + 0.5 * w));
    const cplx fb_l = std::exp(-iq * (xl - 0.5 * w));
    const cplx fa_r = std::exp(iq * (xr + 0.5 * w));
    const cplx fb_r = std::exp(-iq * (xr - 0.5 * w));
    const double comp[2] = {ch.v1, ch.v2};
    for (int c = 0; c < 2; ++c) {
      // rows: left value, left slope, right value, right slope for channel c
      const int rl = 2 * c;
      const int rr = 4 + 2 * c;
      A(rl, ca) = comp[c] * fa_l;
      A(rl, cb) = comp[c] * fb_l;
      A(rl + 1, ca) = comp[c] * iq * fa_l;
      A(rl + 1, cb) = -comp[c] * iq * fb_l;
      A(rr, ca) = comp[c] * fa_r;
      A(rr, cb) = comp[c] * fb_r;
      A(rr + 1, ca) = comp[c] * iq * fa_r;
      A(rr + 1, cb) = -comp[c] * iq * fb_r;
    }
  }
  const cplx in_l = std::exp(ik * xl);
  const cplx out_l = std::exp(-ik * xl);
  const cplx out_r = std::exp(ik * xr);
  A(0, 0) = -out_l;
  A(1, 0) = ik * out_l;
  rhs(0) = in_l;
  rhs(1) = ik * in_l;
  A(2, 2) = -std::exp(kappa * xl);
  A(3, 2) = -kappa * std::exp(kappa * xl);
  A(4, 1) = -out_r;
  A(5, 1) = -ik * out_r;
  A(6, 3) = -std::exp(-kappa * xr);
  A(7, 3) = kappa * std::exp(-kappa * xr);

  const Eigen::PartialPivLU<Matrix8> lu(A);
  sol.rcond = lu.rcond();
  if (!(sol.rcond > kMinRcond)) {
    throw NumericalError("regularized matching system is singular (rcond = " +
                         std::to_string(sol.rcond) + ", w = " + std::to_string(w) + ")");
  }
  const Vector8 x = lu.solve(rhs);
  sol.residual = (A * x - rhs).cwiseAbs().maxCoeff();

  sol.B = x(0) * std::polar(1.0, 2.0 * k * p.x_c);
  sol.C = x(1);
  sol.D_L = x(2);
  sol.D_R = x(3);
  for (std::size_t i = 0; i < 4; ++i) sol.interior[i] = x(static_cast<int>(4 + i));
  return sol;
}

std::vector<double> default_widths() { return {1e-1, 1e-2, 1e-3}; }

ConvergenceReport convergence_study(const ModelParams& p,
                                    std::span<const double> widths) {
  if (widths.size() < 3) {
    throw PreconditionError("convergence study needs at least three widths");
  }
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (!(widths[i] > 0.0)) throw PreconditionError("widths must be positive");
    if (i > 0 && !(widths[i] < widths[i - 1])) {
      throw PreconditionError("widths must be strictly decreasing");
    }
  }

  const Amplitudes exact = solve_amplitudes(p);
  ConvergenceReport report;
  report.widths.assign(widths.begin(), widths.end());
  std::vector<RegularizedSolution> solutions;
  solutions.reserve(widths.size());
  for (const double w : widths) {
    solutions.push_back(solve_regularized(p, w));
    const auto& s = solutions.back();
    report.errors.push_back(std::abs(s.B - exact.B) + std::abs(s.C - exact.C));
    report.max_residual = std::max(report.max_residual, s.residual);
  }

  const bool exact_everywhere = std::all_of(
      report.errors.begin(), report.errors.end(),
      [](double e) { return e <= kExactThreshold; });
  if (!exact_everywhere) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(widths.size());
    for (std::size_t i = 0; i < widths.size(); ++i) {
      const double lx = std::log(widths[i]);
      const double ly = std::log(std::max(report.errors[i], 1e-300));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    report.observed_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }

  const std::size_t last = widths.size() - 1;
  const double w1 = widths[last - 1];
  const double w2 = widths[last];
  const auto extrapolate = [&](cplx a1, cplx a2) {
    return a2 - w2 * (a1 - a2) / (w1 - w2);
  };
  report.B_extrapolated = extrapolate(solutions[last - 1].B, solutions[last].B);
  report.C_extrapolated = extrapolate(solutions[last - 1].C, solutions[last].C);
  report.extrapolated_error = std::abs(report.B_extrapolated - exact.B) +
                              std::abs(report.C_extrapolated - exact.C);
  return report;
}

double dwell_time_regularized(const ModelParams& p, double w) {
  const RegularizedSolution sol = solve_regularized(p, w);
  const auto density = [&sol](double x) {
    const ChannelValues v = sol.at(x);
    return std::norm(v.phi1) + std::norm(v.phi2);
  };
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      density, p.x_c - 0.5 * w, p.x_c + 0.5 * w, 15, 1e-13, &error);
  const double incident_flux = p.hbar * sol.k / p.m;
  return integral / incident_flux;
}

double exterior_closed_channel_time(const ModelParams& p, double w) {
  const RegularizedSolution sol = solve_regularized(p, w);
  const double tail = std::exp(-sol.kappa * w) / (2.0 * sol.kappa);
  const double incident_flux = p.hbar * sol.k / p.m;
  return (std::norm(sol.D_L) + std::norm(sol.D_R)) * tail / incident_flux;
}

}  // namespace twostate
