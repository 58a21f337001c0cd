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

#include "twostate/params.hpp"

#include <cmath>
#include <string>

#include "twostate/errors.hpp"

namespace twostate {

namespace {

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

void validate(const ModelParams& p) {
  if (!std::isfinite(p.E) || !std::isfinite(p.V) || !std::isfinite(p.k0) ||
      !std::isfinite(p.m) || !std::isfinite(p.hbar) || !std::isfinite(p.x_c)) {
    throw DomainError("model parameters must be finite");
  }
  if (!(p.m > 0.0)) throw DomainError("mass must be positive, got " + fmt(p.m));
  if (!(p.hbar > 0.0)) throw DomainError("hbar must be positive, got " + fmt(p.hbar));
  if (!(p.E > 0.0)) throw DomainError("energy must be positive, got " + fmt(p.E));
  if (!(p.V > p.E)) {
    throw DomainError("closed channel requires V > E (E=" + fmt(p.E) +
                      ", V=" + fmt(p.V) + ")");
  }
  if (!(p.k0 >= 0.0)) throw DomainError("coupling k0 must be >= 0, got " + fmt(p.k0));
}

void validate(const ReducedParams& r) {
  if (!std::isfinite(r.epsilon) || !std::isfinite(r.V) || !std::isfinite(r.k0)) {
    throw DomainError("reduced parameters must be finite");
  }
  if (!(r.epsilon > 0.0 && r.epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1), got " + fmt(r.epsilon));
  }
  if (!(r.V > 0.0)) throw DomainError("V must be positive, got " + fmt(r.V));
  if (!(r.k0 >= 0.0)) throw DomainError("coupling k0 must be >= 0, got " + fmt(r.k0));
}

bool is_reduced_convention(const ModelParams& p) noexcept {
  return p.hbar == 1.0 && p.m == 0.5;
}

ReducedParams make_reduced(const ModelParams& p) {
  if (!is_reduced_convention(p)) {
    throw ConventionError("reduced units need hbar = 1 and m = 1/2 (got hbar=" +
                          fmt(p.hbar) + ", m=" + fmt(p.m) + ")");
  }
  validate(p);
  return {.epsilon = p.E / p.V, .V = p.V, .k0 = p.k0};
}

ModelParams expand(const ReducedParams& r) {
  validate(r);
  return {.E = r.epsilon * r.V, .V = r.V, .k0 = r.k0, .m = 0.5, .hbar = 1.0, .x_c = 0.0};
}

WaveNumbers wave_numbers(const ModelParams& p) {
  validate(p);
  return {.k = std::sqrt(2.0 * p.m * p.E) / p.hbar,
          .kappa = std::sqrt(2.0 * p.m * (p.V - p.E)) / p.hbar};
}

}  // namespace twostate
