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

#include "twostate/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "twostate/errors.hpp"
#include "twostate/params.hpp"
#include "twostate/scatter.hpp"
#include "twostate/svg.hpp"
#include "twostate/times.hpp"

namespace twostate {

namespace {

struct QuantityInfo {
  Quantity quantity;
  std::string_view name;
  std::string_view variable;
  std::string_view series;
  std::string_view y_name;
};

constexpr QuantityInfo kQuantities[] = {
    {Quantity::Transmission, "transmission", "epsilon", "k0_4_over_V2", "T2"},
    {Quantity::Phase, "phase", "epsilon", "k0_sq", "phi_t"},
    {Quantity::TauVsEnergy, "tau_vs_energy", "epsilon", "k0_sq", "tau"},
    {Quantity::TauVsCoupling, "tau_vs_coupling", "k0_sq", "epsilon", "tau"},
};

const QuantityInfo& info(Quantity q) {
  for (const auto& i : kQuantities) {
    if (i.quantity == q) return i;
  }
  throw SpecError("unknown quantity");
}

std::string format_number(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

void check_series_value(std::string_view series, double v) {
  const bool ok = series == "epsilon" ? (v > 0.0 && v < 1.0) : (v > 0.0 && std::isfinite(v));
  if (!ok) {
    throw SpecError("series value " + format_number("%g", v) + " is outside the domain of " +
                    std::string(series));
  }
}

}  // namespace

Quantity parse_quantity(std::string_view name) {
  for (const auto& i : kQuantities) {
    if (i.name == name) return i.quantity;
  }
  throw SpecError("unknown sweep quantity '" + std::string(name) +
                  "' (expected transmission, phase, tau_vs_energy or tau_vs_coupling)");
}

std::string_view to_string(Quantity q) noexcept {
  for (const auto& i : kQuantities) {
    if (i.quantity == q) return i.name;
  }
  return "unknown";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "svg") return OutputFormat::Svg;
  if (name == "both") return OutputFormat::Both;
  throw SpecError("unknown output format '" + std::string(name) + "' (expected csv, svg or both)");
}

SweepSpec default_sweep(Quantity q) {
  const QuantityInfo& qi = info(q);
  SweepSpec spec;
  spec.quantity = q;
  spec.series_name = std::string(qi.series);
  spec.variable.name = std::string(qi.variable);
  spec.output = std::string(qi.name) + ".csv";
  switch (q) {
    case Quantity::Transmission:
      spec.series_values = {0.4, 4.0, 40.0};
      spec.variable = {.name = "epsilon", .start = 0.0, .stop = 1.0, .count = 999};
      break;
    case Quantity::Phase:
      spec.series_values = {4.0};  // k0^2 / 4V = 1
      spec.variable = {.name = "epsilon", .start = 0.0, .stop = 1.0, .count = 999};
      break;
    case Quantity::TauVsEnergy:
      spec.series_values = {0.5, 1.0, 2.0};
      spec.variable = {.name = "epsilon", .start = 0.0, .stop = 1.0, .count = 999};
      break;
    case Quantity::TauVsCoupling:
      spec.series_values = {0.6, 0.7, 0.8, 0.9};
      spec.variable = {.name = "k0_sq", .start = 0.0, .stop = 10.0, .count = 1000};
      break;
  }
  return spec;
}

SweepSpec normalized(const SweepSpec& spec) {
  const QuantityInfo& qi = info(spec.quantity);
  SweepSpec out = spec;
  if (out.variable.name.empty()) out.variable.name = std::string(qi.variable);
  if (out.series_name.empty()) out.series_name = std::string(qi.series);
  if (out.variable.name != qi.variable) {
    throw SpecError(std::string(qi.name) + " sweeps " + std::string(qi.variable) +
                    ", not " + out.variable.name);
  }
  if (out.series_name != qi.series) {
    throw SpecError(std::string(qi.name) + " takes series over " + std::string(qi.series) +
                    ", not " + out.series_name);
  }
  for (const auto& [key, value] : out.fixed) {
    if (key != "V") throw SpecError("unknown fixed parameter '" + key + "'");
    if (!(value > 0.0) || !std::isfinite(value)) throw SpecError("V must be positive");
  }
  if (out.series_values.empty()) throw SpecError("sweep needs at least one series value");
  for (const double v : out.series_values) check_series_value(out.series_name, v);
  if (out.variable.count < 2) throw SpecError("sweep count must be at least 2");
  if (!(out.margin > 0.0 && out.margin < 0.5)) throw SpecError("margin must lie in (0, 0.5)");

  auto& var = out.variable;
  if (!std::isfinite(var.start) || !std::isfinite(var.stop)) {
    throw SpecError("sweep range must be finite");
  }
  if (var.start < 0.0) throw SpecError("sweep range starts below 0");
  if (var.start < out.margin) var.start = out.margin;
  if (var.name == "epsilon") {
    if (var.stop > 1.0) throw SpecError("epsilon range ends above 1");
    if (var.stop > 1.0 - out.margin) var.stop = 1.0 - out.margin;
  }
  if (!(var.start < var.stop)) throw SpecError("sweep range is empty after clipping");
  return out;
}

SweepTable compute_sweep(const SweepSpec& raw) {
  const SweepSpec spec = normalized(raw);
  const QuantityInfo& qi = info(spec.quantity);
  const double V = spec.fixed.contains("V") ? spec.fixed.at("V") : 1.0;
  const auto& var = spec.variable;

  SweepTable table;
  table.x_name = var.name;
  table.y_name = std::string(qi.y_name);
  table.x.resize(var.count);
  const double step = (var.stop - var.start) / static_cast<double>(var.count - 1);
  for (std::size_t i = 0; i < var.count; ++i) {
    table.x[i] = var.start + static_cast<double>(i) * step;
  }
  table.x.back() = var.stop;

  for (const double s : spec.series_values) {
    table.columns.push_back(table.y_name + "[" + spec.series_name + "=" +
                            format_number("%g", s) + "]");
    std::vector<double> ys;
    ys.reserve(table.x.size());
    for (const double x : table.x) {
      switch (spec.quantity) {
        case Quantity::Transmission: {
          const double k0 = std::pow(s * V * V, 0.25);
          ys.push_back(transmission_probability({.epsilon = x, .V = V, .k0 = k0}));
          break;
        }
        case Quantity::Phase:
          ys.push_back(
              scattering_phases(expand({.epsilon = x, .V = V, .k0 = std::sqrt(s)})).phi_t);
          break;
        case Quantity::TauVsEnergy:
          ys.push_back(transition_time(ReducedParams{.epsilon = x, .V = V, .k0 = std::sqrt(s)}));
          break;
        case Quantity::TauVsCoupling:
          ys.push_back(transition_time(ReducedParams{.epsilon = s, .V = V, .k0 = std::sqrt(x)}));
          break;
      }
    }
    table.series.push_back(std::move(ys));
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out = table.x_name;
  for (const auto& c : table.columns) out += "," + c;
  out += "\n";
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    out += format_number("%.15g", table.x[i]);
    for (const auto& s : table.series) out += "," + format_number("%.15g", s[i]);
    out += "\n";
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << contents;
  f.close();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::vector<std::filesystem::path> run_sweep(const SweepSpec& spec) {
  const SweepTable table = compute_sweep(spec);
  std::filesystem::path base = spec.output;
  if (base.empty()) base = std::string(to_string(spec.quantity)) + ".csv";

  SvgOptions svg;
  svg.title = std::string(to_string(spec.quantity));

  std::vector<std::filesystem::path> written;
  switch (spec.format) {
    case OutputFormat::Csv:
      write_file(base, to_csv(table));
      written.push_back(base);
      break;
    case OutputFormat::Svg:
      write_file(base, to_svg(table, svg));
      written.push_back(base);
      break;
    case OutputFormat::Both: {
      auto csv = base;
      auto image = base;
      csv.replace_extension(".csv");
      image.replace_extension(".svg");
      write_file(csv, to_csv(table));
      write_file(image, to_svg(table, svg));
      written = {csv, image};
      break;
    }
  }
  return written;
}

}  // namespace twostate
