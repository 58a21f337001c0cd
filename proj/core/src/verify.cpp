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

#include "twostate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "twostate/errors.hpp"
#include "twostate/oracle.hpp"
#include "twostate/wavepacket.hpp"

namespace twostate {

namespace {

std::string printf_string(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// 99 energies x 34 couplings x 3 potentials = 10098 parameter triples.
template <typename Fn>
void for_each_grid_point(Fn&& fn) {
  constexpr int kCouplings = 34;
  for (const double V : {0.5, 1.0, 2.0}) {
    for (int i = 1; i <= 99; ++i) {
      const double eps = 0.01 * i;
      for (int j = 0; j < kCouplings; ++j) {
        const double k0_sq = 0.01 * std::pow(1000.0, static_cast<double>(j) / (kCouplings - 1));
        fn(ReducedParams{.epsilon = eps, .V = V, .k0 = std::sqrt(k0_sq)});
      }
    }
  }
}

CheckResult check_unitarity(const ModelHooks& hooks) {
  double worst = 0.0;
  std::size_t count = 0;
  for_each_grid_point([&](const ReducedParams& r) {
    const Amplitudes a = hooks.amplitudes(expand(r));
    worst = std::max(worst, std::abs(a.T2 + a.R2 - 1.0));
    ++count;
  });
  return {"unitarity_grid", worst <= 1e-12,
          printf_string("max |T2+R2-1| = %.3e over %zu points (tol 1e-12)", worst, count)};
}

CheckResult check_closed_forms(const ModelHooks& hooks) {
  double worst = 0.0;
  for_each_grid_point([&](const ReducedParams& r) {
    const ModelParams p = expand(r);
    const double reduced = transition_time(r);
    if (std::abs(reduced) <= 1e-9) return;
    const double full = hooks.group_delays(p).tau_gt;
    const double via_alpha = transition_time(p);
    worst = std::max({worst, std::abs(full - reduced) / std::abs(reduced),
                      std::abs(via_alpha - reduced) / std::abs(reduced)});
  });
  return {"closed_form_consistency", worst <= 1e-12,
          printf_string("max relative spread of tau across full/alpha/reduced forms = %.3e "
                        "(tol 1e-12)", worst)};
}

CheckResult check_fd_group_delay(const ModelHooks& hooks) {
  const ModelParams p{.E = 0.25, .V = 1.0, .k0 = 1.0};
  const double analytic = hooks.group_delays(p).tau_gt;
  const double h = 1e-3 * p.V;
  const double e1 = std::abs(fd_group_delay(p, h) - analytic);
  const double e2 = std::abs(fd_group_delay(p, h / 2) - analytic);
  const double ratio = e1 / e2;
  const double fine = std::abs(fd_group_delay(p, default_fd_step(p)) - analytic);
  const double target = std::abs(analytic - (-0.5773503));
  const bool ok = ratio >= 3.5 && ratio <= 4.5 && fine <= 1e-6 && target <= 1e-6;
  return {"fd_group_delay", ok,
          printf_string("analytic %.9f, |fd-analytic| at h=1e-6: %.3e, halving ratio %.4f "
                        "(want [3.5, 4.5])", analytic, fine, ratio)};
}

CheckResult check_tau_structure() {
  const double V = 1.0, k0 = 1.0;
  const auto tau = [&](double eps) {
    return transition_time(ReducedParams{.epsilon = eps, .V = V, .k0 = k0});
  };
  const bool zero_at_half = tau(0.5) == 0.0;
  std::size_t sign_failures = 0;
  double antisym = 0.0;
  for (int i = 1; i <= 999; ++i) {
    const double eps = i / 1000.0;
    const double t = tau(eps);
    const double expected = (2.0 * eps - 1.0 > 0) - (2.0 * eps - 1.0 < 0);
    const double got = (t > 0) - (t < 0);
    if (got != expected) ++sign_failures;
    const double mirrored = tau(1.0 - eps);
    antisym = std::max(antisym, std::abs(t + mirrored) / std::max(1.0, std::abs(t)));
  }
  const double low = tau(1e-6);
  const double high = tau(1.0 - 1e-6);
  const bool ok = zero_at_half && sign_failures == 0 && antisym <= 1e-12 &&
                  std::abs(low) > 1e2 && std::abs(high) > 1e2;
  return {"tau_structure", ok,
          printf_string("tau(0.5)=%g, sign failures %zu/999, antisymmetry %.3e, "
                        "tau(1e-6)=%.4g, tau(1-1e-6)=%.4g", tau(0.5), sign_failures, antisym,
                        low, high)};
}

CheckResult check_extremum() {
  bool ok = true;
  std::string detail;
  for (const double eps : {0.25, 0.75}) {
    const ExtremalCoupling numeric = maximize_abs_tau(eps, 1.0, 1e-3, 100.0);
    const double k_star = 4.0 * std::sqrt(eps * (1.0 - eps));
    const double t_star = std::abs(2.0 * eps - 1.0) / (4.0 * eps * (1.0 - eps));
    const double dk = std::abs(numeric.k0_sq - k_star);
    const double dt = std::abs(std::abs(numeric.tau) - t_star);
    ok = ok && dk <= 1e-6 && dt <= 1e-9;
    detail += printf_string("eps=%.2f: k0^2*=%.9f (|d|=%.2e), |tau*|=%.10f (|d|=%.2e); ", eps,
                            numeric.k0_sq, dk, std::abs(numeric.tau), dt);
  }
  return {"extremum_law", ok, detail};
}

CheckResult check_regularization() {
  const ModelParams p{.E = 0.5, .V = 1.0, .k0 = 1.0};
  const auto widths = default_widths();
  const ConvergenceReport report = convergence_study(p, widths);
  bool decreasing = true;
  for (std::size_t i = 1; i < report.errors.size(); ++i) {
    decreasing = decreasing && report.errors[i] < report.errors[i - 1];
  }
  double flux = 0.0;
  for (const double w : widths) {
    const RegularizedSolution s = solve_regularized(p, w);
    flux = std::max(flux, std::abs(std::norm(s.B) + std::norm(s.C) - 1.0));
  }
  const double order = report.observed_order.value_or(0.0);
  const bool ok = decreasing && order >= 0.8 && report.errors.back() <= 2e-3 &&
                  report.max_residual <= 1e-10 && flux <= 1e-10;
  return {"regularization_convergence", ok,
          printf_string("errors %.3e %.3e %.3e, order %.3f, max residual %.2e, flux defect %.2e, "
                        "extrapolated error %.2e", report.errors[0], report.errors[1],
                        report.errors[2], order, report.max_residual, flux,
                        report.extrapolated_error)};
}

CheckResult check_dwell() {
  const ModelParams p{.E = 0.5, .V = 1.0, .k0 = 1.0};
  std::vector<double> dwell;
  for (const double w : default_widths()) dwell.push_back(dwell_time_regularized(p, w));
  bool decreasing = true;
  for (std::size_t i = 1; i < dwell.size(); ++i) decreasing = decreasing && dwell[i] < dwell[i - 1];
  const bool ok = decreasing && dwell.back() <= 1e-2;
  return {"dwell_limit", ok,
          printf_string("tau_d(w) = %.4e, %.4e, %.4e for w = 1e-1, 1e-2, 1e-3", dwell[0],
                        dwell[1], dwell[2])};
}

CheckResult check_taxonomy() {
  std::size_t failures = 0;
  std::size_t count = 0;
  for_each_grid_point([&](const ReducedParams& r) {
    const TimeTaxonomy t = time_taxonomy(expand(r));
    const bool ok = t.tau_d == 0.0 && t.tau_a == 0.0 && t.tau_i == t.tau_g &&
                    t.tau_d - (t.tau_a + t.tau_g - t.tau_i) == 0.0;
    if (!ok) ++failures;
    ++count;
  });
  return {"taxonomy_identity", failures == 0,
          printf_string("%zu/%zu parameter points violate tau_d = tau_a + tau_g - tau_i", failures,
                        count)};
}

CheckResult check_wavepacket() {
  const ModelParams p{.E = 0.25, .V = 1.0, .k0 = 1.0};
  const PacketSpec packet = default_packet(p);
  const DelayResult r = propagate(packet, p, 1e-3, default_grid(packet, p));
  const double expected = transition_time(p);
  const double rel = std::abs(r.delay - expected) / std::abs(expected);
  const double t2 = solve_amplitudes(p).T2;
  const double trans = std::abs(r.transmitted_fraction - t2) / t2;
  const bool ok = rel <= 0.25 && r.norm_drift <= 1e-6 && trans <= 0.05;
  return {"wavepacket_delay", ok,
          printf_string("delay %.4f vs tau %.4f (rel %.3f), norm drift %.2e, transmitted %.4f vs "
                        "|T|^2 %.4f", r.delay, expected, rel, r.norm_drift,
                        r.transmitted_fraction, t2)};
}

template <typename Fn>
CheckResult guarded(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {name, false, std::string("raised: ") + e.what()};
  }
}

}  // namespace

Fault parse_fault(std::string_view name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "tau-sign") return Fault::TauSign;
  if (name == "unitarity") return Fault::Unitarity;
  throw SpecError("unknown fault '" + std::string(name) + "' (expected none, tau-sign or unitarity)");
}

ModelHooks make_hooks(Fault fault) {
  ModelHooks hooks{.amplitudes = solve_amplitudes,
                   .group_delays = [](const ModelParams& p) { return group_delays(p); }};
  switch (fault) {
    case Fault::None:
      break;
    case Fault::TauSign:
      hooks.group_delays = [](const ModelParams& p) {
        GroupDelays d = group_delays(p);
        d.tau_gt = -d.tau_gt;
        d.tau_gr = -d.tau_gr;
        d.tau_g = -d.tau_g;
        return d;
      };
      break;
    case Fault::Unitarity:
      hooks.amplitudes = [](const ModelParams& p) {
        Amplitudes a = solve_amplitudes(p);
        a.T2 += 1e-6;
        return a;
      };
      break;
  }
  return hooks;
}

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ExtremalCoupling maximize_abs_tau(double epsilon, double V, double lo, double hi) {
  const auto objective = [&](double k0_sq) {
    return -std::abs(
        transition_time(ReducedParams{.epsilon = epsilon, .V = V, .k0 = std::sqrt(k0_sq)}));
  };
  const auto [arg, value] = boost::math::tools::brent_find_minima(
      objective, lo, hi, std::numeric_limits<double>::digits / 2 + 6);
  const double tau =
      transition_time(ReducedParams{.epsilon = epsilon, .V = V, .k0 = std::sqrt(arg)});
  (void)value;
  return {.k0_sq = arg, .tau = tau};
}

VerifyReport verify(const VerifyOptions& options) {
  const ModelHooks& hooks = options.hooks;
  VerifyReport report;
  report.checks.push_back(guarded("unitarity_grid", [&] { return check_unitarity(hooks); }));
  report.checks.push_back(
      guarded("closed_form_consistency", [&] { return check_closed_forms(hooks); }));
  report.checks.push_back(guarded("fd_group_delay", [&] { return check_fd_group_delay(hooks); }));
  report.checks.push_back(guarded("tau_structure", check_tau_structure));
  report.checks.push_back(guarded("extremum_law", check_extremum));
  report.checks.push_back(guarded("regularization_convergence", check_regularization));
  report.checks.push_back(guarded("dwell_limit", check_dwell));
  report.checks.push_back(guarded("taxonomy_identity", check_taxonomy));
  if (options.include_wavepacket) {
    report.checks.push_back(guarded("wavepacket_delay", check_wavepacket));
  }
  return report;
}

}  // namespace twostate
