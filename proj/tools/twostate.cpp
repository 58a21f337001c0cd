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

// twostate: command-line front end.
//
//   twostate sweep      --quantity tau_vs_energy --series 0.5,1,2 --out tau.csv
//   twostate verify     [--inject-fault tau-sign|unitarity] [--with-wavepacket]
//   twostate wavepacket --epsilon 0.25 --coupling 1 [--snapshot dump.csv]
//   twostate greens     --energy 0.5 --potential 1 [--from -5 --to 5 --count 101]
//
// Every subcommand accepts --config FILE.json; its keys are flag names
// without the leading dashes, and flags given on the command line win.
//
// Exit status: 0 success, 1 a verification check failed, 2 usage or domain
// error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twostate/errors.hpp"
#include "twostate/greens.hpp"
#include "twostate/oracle.hpp"
#include "twostate/scatter.hpp"
#include "twostate/sweep.hpp"
#include "twostate/times.hpp"
#include "twostate/verify.hpp"
#include "twostate/wavepacket.hpp"

namespace {

using twostate::ModelParams;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Physical parameters shared by several subcommands.
struct PhysicsFlags {
  std::optional<double> epsilon;
  std::optional<double> energy;
  double potential = 1.0;
  std::optional<double> coupling;
  std::optional<double> coupling_sq;
  double mass = 0.5;
  double hbar = 1.0;

  [[nodiscard]] ModelParams model(double default_energy, double default_k0) const {
    if (epsilon && energy) throw UsageError("give either --epsilon or --energy, not both");
    if (coupling && coupling_sq) throw UsageError("give either --coupling or --coupling-sq, not both");
    if (coupling_sq && *coupling_sq < 0.0) throw UsageError("--coupling-sq must be >= 0");
    ModelParams p;
    p.V = potential;
    p.E = epsilon ? *epsilon * potential : energy.value_or(default_energy);
    p.k0 = coupling ? *coupling : coupling_sq ? std::sqrt(*coupling_sq) : default_k0;
    p.m = mass;
    p.hbar = hbar;
    return p;
  }
};

// Binds a flag both to CLI11 and to the JSON config key of the same name.
class Binder {
 public:
  explicit Binder(CLI::App* app) : app_(app) {}

  template <typename T>
  CLI::Option* add(const std::string& name, T& target, const std::string& help) {
    CLI::Option* opt = app_->add_option("--" + name, target, help);
    setters_[name] = {opt, [&target](const json& j) { target = j.get<T>(); }};
    return opt;
  }

  template <typename T>
  CLI::Option* add(const std::string& name, std::optional<T>& target, const std::string& help) {
    CLI::Option* opt = app_->add_option("--" + name, target, help);
    setters_[name] = {opt, [&target](const json& j) { target = j.get<T>(); }};
    return opt;
  }

  CLI::Option* add_flag(const std::string& name, bool& target, const std::string& help) {
    CLI::Option* opt = app_->add_flag("--" + name, target, help);
    setters_[name] = {opt, [&target](const json& j) { target = j.get<bool>(); }};
    return opt;
  }

  void add_physics(PhysicsFlags& f) {
    add("epsilon", f.epsilon, "reduced energy E/V");
    add("energy", f.energy, "incident energy E (a.u.)");
    add("potential", f.potential, "closed-channel potential V (a.u.)");
    add("coupling", f.coupling, "coupling strength k0");
    add("coupling-sq", f.coupling_sq, "squared coupling strength k0^2");
    add("mass", f.mass, "mass m (default 1/2)");
    add("hbar", f.hbar, "reduced Planck constant (default 1)");
  }

  // Applies config values for options that were not given on the command line.
  void apply(const json& config) const {
    for (const auto& [key, value] : config.items()) {
      if (key == "config") continue;
      const auto it = setters_.find(key);
      if (it == setters_.end()) {
        throw UsageError("unknown config key '" + key + "' for " + app_->get_name());
      }
      if (it->second.option->count() > 0) continue;
      try {
        it->second.set(value);
      } catch (const json::exception& e) {
        throw UsageError("config key '" + key + "': " + e.what());
      }
    }
  }

 private:
  struct Setter {
    CLI::Option* option;
    std::function<void(const json&)> set;
  };
  CLI::App* app_;
  std::map<std::string, Setter> setters_;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
  std::string quantity = "tau_vs_energy";
  std::vector<double> series;
  PhysicsFlags physics;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<std::size_t> count;
  double margin = 1e-4;
  std::string out;
  std::string format = "csv";
};

int run_sweep(const SweepFlags& f) {
  using namespace twostate;
  SweepSpec spec = default_sweep(parse_quantity(f.quantity));
  spec.fixed["V"] = f.physics.potential;
  if (!f.series.empty()) {
    spec.series_values = f.series;
  } else if (spec.series_name == "epsilon" && f.physics.epsilon) {
    spec.series_values = {*f.physics.epsilon};
  } else if (spec.series_name == "k0_sq" && (f.physics.coupling || f.physics.coupling_sq)) {
    const double k0_sq = f.physics.coupling_sq ? *f.physics.coupling_sq
                                               : *f.physics.coupling * *f.physics.coupling;
    spec.series_values = {k0_sq};
  }
  if (f.from) spec.variable.start = *f.from;
  if (f.to) spec.variable.stop = *f.to;
  if (f.count) spec.variable.count = *f.count;
  spec.margin = f.margin;
  spec.format = parse_format(f.format);
  if (!f.out.empty()) {
    spec.output = f.out;
  } else {
    spec.output = std::string(to_string(spec.quantity)) +
                  (spec.format == OutputFormat::Svg ? ".svg" : ".csv");
  }
  for (const auto& path : run_sweep(spec)) std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  std::string fault = "none";
  bool with_wavepacket = false;
};

int run_verify(const VerifyFlags& f) {
  using namespace twostate;
  VerifyOptions options;
  options.hooks = make_hooks(parse_fault(f.fault));
  options.include_wavepacket = f.with_wavepacket;
  const VerifyReport report = verify(options);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  const bool ok = report.all_passed();
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- wavepacket

struct WavepacketFlags {
  PhysicsFlags physics;
  double width = 1e-3;
  double sigma = 100.0;
  std::string snapshot;
  std::size_t stride = 100;
  std::size_t point_stride = 10;
};

int run_wavepacket(const WavepacketFlags& f) {
  using namespace twostate;
  const ModelParams p = f.physics.model(0.25, 1.0);
  const PacketSpec packet = default_packet(p, f.sigma);
  const GridSpec grid = default_grid(packet, p);

  std::ofstream dump;
  SnapshotOptions snapshots;
  if (!f.snapshot.empty()) {
    dump.open(f.snapshot, std::ios::binary | std::ios::trunc);
    if (!dump) throw IoError("cannot open '" + f.snapshot + "' for writing");
    snapshots = {.out = &dump, .step_stride = f.stride, .point_stride = f.point_stride};
  }
  const DelayResult r = propagate(packet, p, f.width, grid, snapshots);
  std::cout << "grid          L=" << fmt15(grid.L) << " N=" << grid.N << " dt=" << fmt15(grid.dt)
            << "\n"
            << "t_arrival     " << fmt15(r.t_arrival) << "\n"
            << "t_free        " << fmt15(r.t_free) << "\n"
            << "delay         " << fmt15(r.delay) << "\n";
  if (p.k0 > 0.0) std::cout << "tau (closed)  " << fmt15(transition_time(p)) << "\n";
  std::cout << "transmitted   " << fmt15(r.transmitted_fraction) << "\n"
            << "|T(E0)|^2     " << fmt15(solve_amplitudes(p).T2) << "\n"
            << "norm_drift    " << fmt15(r.norm_drift) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- greens

struct GreensFlags {
  PhysicsFlags physics;
  std::optional<double> from;
  std::optional<double> to;
  std::size_t count = 101;
  std::string out;
};

int run_greens(const GreensFlags& f) {
  using namespace twostate;
  const ModelParams p = f.physics.model(0.5, 1.0);
  if (!f.from && !f.to) {
    const GreensValue g = greens_constant(p.x_c, p.x_c, p);
    std::cout << "G(x_c,x_c|E)  " << fmt15(g.value) << "\n"
              << "alpha         " << fmt15(effective_strength(p)) << "\n"
              << "kappa         " << fmt15(wave_numbers(p).kappa) << "\n";
    return kExitOk;
  }
  if (!f.from || !f.to) throw UsageError("give both --from and --to for a Green's function profile");
  if (f.count < 2 || !(*f.from < *f.to)) throw UsageError("profile needs --from < --to and --count >= 2");

  std::string csv = "x,G\n";
  for (std::size_t i = 0; i < f.count; ++i) {
    const double x = i + 1 == f.count
                         ? *f.to
                         : *f.from + (*f.to - *f.from) * static_cast<double>(i) /
                                         static_cast<double>(f.count - 1);
    csv += fmt15(x) + "," + fmt15(greens_constant(x, p.x_c, p).value) + "\n";
  }
  if (f.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream file(f.out, std::ios::binary | std::ios::trunc);
    if (!file || !(file << csv)) throw IoError("cannot write '" + f.out + "'");
    std::cout << "wrote " << f.out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-state scattering with delta-function coupling: transition times, "
               "oracles and figure sweeps"};
  app.require_subcommand(1);

  std::string config_path;
  const auto add_config = [&config_path](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON file with default flag values");
  };

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweeps (CSV / SVG)");
  Binder sweep_bind(sweep);
  sweep_bind.add("quantity", sweep_flags.quantity,
                 "transmission | phase | tau_vs_energy | tau_vs_coupling");
  sweep_bind.add("series", sweep_flags.series, "series parameter values")->delimiter(',');
  sweep_bind.add_physics(sweep_flags.physics);
  sweep_bind.add("from", sweep_flags.from, "start of the swept variable");
  sweep_bind.add("to", sweep_flags.to, "end of the swept variable");
  sweep_bind.add("count", sweep_flags.count, "number of points");
  sweep_bind.add("margin", sweep_flags.margin, "clipping margin at open endpoints");
  sweep_bind.add("out", sweep_flags.out, "output path");
  sweep_bind.add("format", sweep_flags.format, "csv | svg | both");
  add_config(sweep);

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "run the oracle verification suite");
  Binder verify_bind(verify);
  verify_bind.add("inject-fault", verify_flags.fault, "none | tau-sign | unitarity");
  verify_bind.add_flag("with-wavepacket", verify_flags.with_wavepacket,
                       "include the time-domain delay check (slow)");
  add_config(verify);

  WavepacketFlags packet_flags;
  CLI::App* packet = app.add_subcommand("wavepacket", "time-domain arrival delay");
  Binder packet_bind(packet);
  packet_bind.add_physics(packet_flags.physics);
  packet_bind.add("width", packet_flags.width, "coupling width w");
  packet_bind.add("sigma", packet_flags.sigma, "packet spatial width");
  packet_bind.add("snapshot", packet_flags.snapshot, "CSV dump of densities");
  packet_bind.add("stride", packet_flags.stride, "time steps between snapshots");
  packet_bind.add("point-stride", packet_flags.point_stride, "grid points between snapshot rows");
  add_config(packet);

  GreensFlags greens_flags;
  CLI::App* greens = app.add_subcommand("greens", "closed-channel Green's function");
  Binder greens_bind(greens);
  greens_bind.add_physics(greens_flags.physics);
  greens_bind.add("from", greens_flags.from, "profile start x");
  greens_bind.add("to", greens_flags.to, "profile end x");
  greens_bind.add("count", greens_flags.count, "profile points");
  greens_bind.add("out", greens_flags.out, "output path (default stdout)");
  add_config(greens);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json config;
    if (!config_path.empty()) config = load_config(config_path);
    if (sweep->parsed()) {
      sweep_bind.apply(config);
      return run_sweep(sweep_flags);
    }
    if (verify->parsed()) {
      verify_bind.apply(config);
      return run_verify(verify_flags);
    }
    if (packet->parsed()) {
      packet_bind.apply(config);
      return run_wavepacket(packet_flags);
    }
    greens_bind.apply(config);
    return run_greens(greens_flags);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const twostate::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
  } catch (const twostate::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
