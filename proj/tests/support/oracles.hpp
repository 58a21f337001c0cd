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

// Test-only oracles. None of these call into the library routines they are
// used to check.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace twostate::testing {

/// Diagonal value G(0, 0 | E) of (E - H2) G = delta(x) solved by second-order
/// central differences on [-L, L], L = 20 / kappa, with zero Dirichlet ends.
/// `points_per_decay` sets the spacing h = 1 / (kappa * points_per_decay).
inline double greens_grid_diagonal(double E, double V, double m, double hbar,
                                   double points_per_decay) {
  const double kappa = std::sqrt(2.0 * m * (V - E)) / hbar;
  const double L = 20.0 / kappa;
  const double h = 1.0 / (kappa * points_per_decay);
  const auto half = static_cast<std::size_t>(std::ceil(L / h));
  const std::size_t n = 2 * half + 1;  // node `half` sits at x = 0

  // (hbar^2 / 2m) (G[j+1] - 2 G[j] + G[j-1]) / h^2 - (V - E) G[j] = delta_j0 / h
  const double c = hbar * hbar / (2.0 * m * h * h);
  const double diag = -2.0 * c - (V - E);
  std::vector<double> rhs(n, 0.0);
  rhs[half] = 1.0 / h;

  // Thomas algorithm, constant off-diagonal c.
  std::vector<double> cp(n), dp(n);
  cp[0] = c / diag;
  dp[0] = rhs[0] / diag;
  for (std::size_t j = 1; j < n; ++j) {
    const double denom = diag - c * cp[j - 1];
    cp[j] = c / denom;
    dp[j] = (rhs[j] - c * dp[j - 1]) / denom;
  }
  std::vector<double> g(n);
  g[n - 1] = dp[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) g[j] = dp[j] - cp[j] * g[j + 1];
  return g[half];
}

/// Richardson combination of spacings h and h/2 (second-order scheme).
inline double greens_grid_extrapolated(double E, double V, double m, double hbar,
                                       double points_per_decay = 50.0) {
  const double coarse = greens_grid_diagonal(E, V, m, hbar, points_per_decay);
  const double fine = greens_grid_diagonal(E, V, m, hbar, 2.0 * points_per_decay);
  return (4.0 * fine - coarse) / 3.0;
}

/// Reflection and transmission for -hbar^2/2m phi'' + s delta(x) phi = E phi
/// by Cramer's rule on the 2x2 system
///   1 + B = C
///   ik C - ik (1 - B) = (2m s / hbar^2) C
struct HandSolved {
  std::complex<double> B;
  std::complex<double> C;
};

inline HandSolved hand_solve_delta(double E, double strength, double m, double hbar) {
  using cplx = std::complex<double>;
  const double k = std::sqrt(2.0 * m * E) / hbar;
  const double q = 2.0 * m * strength / (hbar * hbar);
  // unknowns (B, C):  [ 1, -1 ] [B]   [ -1 ]
  //                   [ ik, ik - q ] [C] = [ ik ]
  const cplx ik(0.0, k);
  const cplx a11 = 1.0, a12 = -1.0, a21 = ik, a22 = ik - q;
  const cplx b1 = -1.0, b2 = ik;
  const cplx det = a11 * a22 - a12 * a21;
  return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

/// Fixed-seed generator of in-regime parameters for property tests.
class ParamGenerator {
 public:
  explicit ParamGenerator(std::uint64_t seed = 0x5eed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace twostate::testing
