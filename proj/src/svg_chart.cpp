// Copyright 2026 The fscontract Authors
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

#include "fscontract/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace fsc {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0, hi = 1.0;
};

Range finite_range(const std::vector<double>& v) {
  Range r{HUGE_VAL, -HUGE_VAL};
  for (double x : v)
    if (std::isfinite(x)) {
      r.lo = std::min(r.lo, x);
      r.hi = std::max(r.hi, x);
    }
  if (r.lo > r.hi) return {0.0, 1.0};
  if (r.hi - r.lo < 1e-12 * std::max(1.0, std::abs(r.hi))) {
    const double pad = std::max(std::abs(r.hi) * 0.05, 1e-9);
    return {r.lo - pad, r.hi + pad};
  }
  return r;
}

std::string tick(double v) {
  const double a = std::abs(v);
  if (a != 0.0 && (a < 1e-2 || a >= 1e5)) return fmt("%.2e", v);
  return fmt("%.4g", v);
}

}  // namespace

std::string svg_line_charts(const std::vector<ChartPanel>& panels, int columns,
                            int panel_width, int panel_height) {
  const int n = static_cast<int>(panels.size());
  const int cols = std::max(1, std::min(columns, n));
  const int rows = (n + cols - 1) / cols;
  const int width = cols * panel_width, height = std::max(rows, 1) * panel_height;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double left = 62, right = 16, top = 28, bottom = 40;
  for (int p = 0; p < n; ++p) {
    const auto& panel = panels[p];
    const double ox = (p % cols) * panel_width, oy = (p / cols) * panel_height;
    const double x0 = ox + left, x1 = ox + panel_width - right;
    const double y0 = oy + panel_height - bottom, y1 = oy + top;
    const Range xr = finite_range(panel.x), yr = finite_range(panel.y);
    auto sx = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
    auto sy = [&](double y) { return y0 - (y - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

    out += "<g>\n";
    out += "<text x=\"" + fmt("%.1f", (x0 + x1) / 2) + "\" y=\"" + fmt("%.1f", oy + 16) +
           "\" text-anchor=\"middle\" font-weight=\"bold\">" + escape(panel.title) + "</text>\n";
    out += "<path d=\"M" + fmt("%.1f", x0) + " " + fmt("%.1f", y1) + " V" + fmt("%.1f", y0) +
           " H" + fmt("%.1f", x1) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
      const double yv = yr.lo + (yr.hi - yr.lo) * i / 4.0;
      const double xv = xr.lo + (xr.hi - xr.lo) * i / 4.0;
      out += "<text x=\"" + fmt("%.1f", x0 - 4) + "\" y=\"" + fmt("%.1f", sy(yv) + 4) +
             "\" text-anchor=\"end\">" + tick(yv) + "</text>\n";
      out += "<text x=\"" + fmt("%.1f", sx(xv)) + "\" y=\"" + fmt("%.1f", y0 + 14) +
             "\" text-anchor=\"middle\">" + tick(xv) + "</text>\n";
    }
    out += "<text x=\"" + fmt("%.1f", (x0 + x1) / 2) + "\" y=\"" + fmt("%.1f", y0 + 30) +
           "\" text-anchor=\"middle\">" + escape(panel.x_label) + "</text>\n";

    std::string d;
    bool pen_down = false;
    const std::size_t count = std::min(panel.x.size(), panel.y.size());
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::isfinite(panel.x[i]) || !std::isfinite(panel.y[i])) {
        pen_down = false;
        continue;
      }
      d += (pen_down ? " L" : (d.empty() ? "M" : " M")) + fmt("%.2f", sx(panel.x[i])) + " " +
           fmt("%.2f", sy(panel.y[i]));
      pen_down = true;
    }
    if (!d.empty())
      out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < count; ++i)
      if (std::isfinite(panel.x[i]) && std::isfinite(panel.y[i]))
        out += "<circle cx=\"" + fmt("%.2f", sx(panel.x[i])) + "\" cy=\"" +
               fmt("%.2f", sy(panel.y[i])) + "\" r=\"2.5\" fill=\"#1f5fa8\"/>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fsc
