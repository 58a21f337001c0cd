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

#include "twostate/greens.hpp"

#include <cmath>

#include "twostate/errors.hpp"

namespace twostate {

GreensValue greens_constant(double x1, double x2, const ModelParams& p) {
  if (!(p.m > 0.0) || !(p.hbar > 0.0)) {
    throw DomainError("Green's function needs m > 0 and hbar > 0");
  }
  if (!std::isfinite(p.E) || !std::isfinite(p.V) || !(p.V > p.E)) {
    throw DomainError("closed-channel Green's function needs V > E");
  }
  const double gap = p.V - p.E;
  const double kappa = std::sqrt(2.0 * p.m * gap) / p.hbar;
  const double prefactor = std::sqrt(p.m / (2.0 * p.hbar * p.hbar));
  // |x1 - x2| is symmetric bit-for-bit, so is the result.
  const double value = -prefactor * std::exp(-kappa * std::abs(x1 - x2)) / std::sqrt(gap);
  return {.value = value, .x1 = x1, .x2 = x2, .E = p.E};
}

double effective_strength(const ModelParams& p) {
  if (!(p.k0 >= 0.0)) throw DomainError("coupling k0 must be >= 0");
  return -p.k0 * p.k0 * greens_constant(p.x_c, p.x_c, p).value;
}

}  // namespace twostate
