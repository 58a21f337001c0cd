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

#include "twostate/params.hpp"

namespace twostate {

/// Energy-domain Green's function of the uncoupled closed channel,
/// <x1|(E - H2)^-1|x2>, evaluated below threshold where it is real and
/// strictly negative.
struct GreensValue {
  double value = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double E = 0.0;
};

/// -sqrt(m / (2 hbar^2)) * exp(-kappa |x1 - x2|) / sqrt(V - E).
///
/// Only E < V, m > 0 and hbar > 0 are required; E <= 0 is allowed here
/// since the expression stays real and finite there. Throws DomainError
/// otherwise.
[[nodiscard]] GreensValue greens_constant(double x1, double x2,
                                          const ModelParams& p);

/// Strength of the attractive single-channel delta well obtained by
/// eliminating the closed channel: alpha = -k0^2 G(x_c, x_c | E) >= 0.
[[nodiscard]] double effective_strength(const ModelParams& p);

}  // namespace twostate
