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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace twostate {

/// Curves that can be swept. All are evaluated in reduced units
/// (hbar = 1, 2m = 1).
enum class Quantity {
  Transmission,   ///< |T|^2 against epsilon, one curve per k0^4 / V^2
  Phase,          ///< phi_t against epsilon, one curve per k0^2
  TauVsEnergy,    ///< tau against epsilon, one curve per k0^2
  TauVsCoupling,  ///< tau against k0^2, one curve per epsilon
};

enum class OutputFormat { Csv, Svg, Both };

struct SweepVariable {
  std::string name;  ///< "epsilon" or "k0_sq"
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 999;
};

struct SweepSpec {
  Quantity quantity = Quantity::TauVsEnergy;
  std::map<std::string, double> fixed{{"V", 1.0}};
  std::string series_name;  ///< "k0_4_over_V2", "k0_sq" or "epsilon"
  std::vector<double> series_values;
  SweepVariable variable;
  std::filesystem::path output;
  OutputFormat format = OutputFormat::Csv;
  double margin = 1e-4;  ///< clipping applied to open interval endpoints
};

/// Evaluated sweep: one abscissa column followed by one column per series.
struct SweepTable {
  std::string x_name;
  std::string y_name;
  std::vector<std::string> columns;  ///< header names of the series columns
  std::vector<double> x;
  std::vector<std::vector<double>> series;  ///< series[i][j] at x[j]
};

[[nodiscard]] Quantity parse_quantity(std::string_view name);
[[nodiscard]] std::string_view to_string(Quantity q) noexcept;
[[nodiscard]] OutputFormat parse_format(std::string_view name);

/// Default figure parameters for each quantity.
[[nodiscard]] SweepSpec default_sweep(Quantity q);

/// Validates the spec (SpecError) and returns it with the variable range
/// clipped into the open domain.
[[nodiscard]] SweepSpec normalized(const SweepSpec& spec);

/// Evaluates every point. Throws SpecError on an invalid spec.
[[nodiscard]] SweepTable compute_sweep(const SweepSpec& spec);

/// Header row plus one row per point, 15 significant digits, LF endings.
[[nodiscard]] std::string to_csv(const SweepTable& table);

/// Writes the requested artifacts and returns their paths. Throws IoError
/// when a file cannot be written.
std::vector<std::filesystem::path> run_sweep(const SweepSpec& spec);

}  // namespace twostate
