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

#include "twostate/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace twostate {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v, const char* pattern = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) { lo = 0.0; hi = 1.0; }
    if (hi - lo <= 0.0) { lo -= 0.5; hi += 0.5; }
  }
};

}  // namespace

std::string to_svg(const SweepTable& table, const SvgOptions& options) {
  const double W = options.width;
  const double H = options.height;
  const double left = 70.0, right = 170.0, top = 40.0, bottom = 55.0;
  const double pw = W - left - right;
  const double ph = H - top - bottom;

  Range xr, yr;
  for (const double x : table.x) xr.add(x);
  for (const auto& s : table.series) {
    for (const double y : s) yr.add(y);
  }
  xr.pad();
  yr.pad();

  const auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto sy = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" +
       num(H) + "\" viewBox=\"0 0 " + num(W) + " " + num(H) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(W) + "\" height=\"" + num(H) +
       "\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + escape(options.title) + "</text>\n";
  }

  // frame and ticks
  s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) +
       "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double px = sx(fx);
    const double py = sy(fy);
    s += "<line x1=\"" + num(px) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px) +
         "\" y2=\"" + num(top + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(px) + "\" y=\"" + num(top + ph + 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
         num(fx, "%.3g") + "</text>\n";
    s += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(left) +
         "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         num(fy, "%.3g") + "</text>\n";
  }
  s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(H - 12) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
       escape(table.x_name) + "</text>\n";
  s += "<text x=\"18\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" "
       "font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " +
       num(top + ph / 2) + ")\">" + escape(table.y_name) + "</text>\n";

  // one polyline per series; non-finite samples split the line
  for (std::size_t k = 0; k < table.series.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    std::string points;
    const auto flush = [&] {
      if (!points.empty()) {
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t i = 0; i < table.x.size(); ++i) {
      const double y = table.series[k][i];
      if (!std::isfinite(y)) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += num(sx(table.x[i]), "%.2f") + "," + num(sy(y), "%.2f");
    }
    flush();

    const double ly = top + 16.0 + 18.0 * static_cast<double>(k);
    s += "<line x1=\"" + num(left + pw + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
         num(left + pw + 32) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
    const std::string label = k < table.columns.size() ? table.columns[k] : "";
    s += "<text x=\"" + num(left + pw + 36) + "\" y=\"" + num(ly) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(label) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace twostate
