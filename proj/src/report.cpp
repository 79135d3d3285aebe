// Copyright 2026 The auction-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "auctionlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "auctionlab/errors.hpp"

namespace auctionlab {

namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
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
  double lo = 0.0;
  double hi = 1.0;
};

// Tight data range, padded 5% each side; collapses to a unit-ish window
// around a constant series.
Range padded_range(double lo, double hi, bool any) {
  if (!any) return Range{0.0, 1.0};
  if (lo == hi) {
    const double pad = std::max(std::abs(lo) * 0.1, 1e-9);
    return Range{lo - pad, hi + pad};
  }
  const double pad = 0.05 * (hi - lo);
  return Range{lo - pad, hi + pad};
}

constexpr double kWidth = 960.0, kHeight = 540.0, kMargin = 60.0;
constexpr const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string fmt_sig9(double x) { return fmt("%.9g", x); }

std::string fmt_sig6(double x) { return fmt("%.6g", x); }

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    if (needs_quoting(fields[i])) {
      out += '"';
      for (const char c : fields[i]) {
        out += c;
        if (c == '"') out += '"';
      }
      out += '"';
    } else {
      out += fields[i];
    }
  }
  out += '\n';
  return out;
}

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series) {
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  bool any = false;
  for (const SvgSeries& s : series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!any) {
        x_lo = x_hi = s.x[i];
        y_lo = y_hi = s.y[i];
        any = true;
      } else {
        x_lo = std::min(x_lo, s.x[i]);
        x_hi = std::max(x_hi, s.x[i]);
        y_lo = std::min(y_lo, s.y[i]);
        y_hi = std::max(y_hi, s.y[i]);
      }
    }
  }
  const Range xr = padded_range(x_lo, x_hi, any);
  const Range yr = padded_range(y_lo, y_hi, any);
  const double plot_w = kWidth - 2.0 * kMargin;
  const double plot_h = kHeight - 2.0 * kMargin;
  const auto px = [&](double x) {
    return kMargin + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto py = [&](double y) {
    return kHeight - kMargin - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 540\" "
         "width=\"960\" height=\"540\">\n";
  svg += "<rect width=\"960\" height=\"540\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"480\" y=\"30\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"18\">" +
         xml_escape(title) + "</text>\n";

  // Axes with five ticks each; light grid behind the data.
  for (int i = 0; i < 5; ++i) {
    const double f = i / 4.0;
    const double gx = kMargin + f * plot_w;
    const double gy = kHeight - kMargin - f * plot_h;
    svg += "<line x1=\"" + fmt("%.2f", gx) + "\" y1=\"" + fmt("%.2f", kMargin) +
           "\" x2=\"" + fmt("%.2f", gx) + "\" y2=\"" +
           fmt("%.2f", kHeight - kMargin) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt("%.2f", kMargin) + "\" y1=\"" + fmt("%.2f", gy) +
           "\" x2=\"" + fmt("%.2f", kWidth - kMargin) + "\" y2=\"" +
           fmt("%.2f", gy) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", gx) + "\" y=\"" +
           fmt("%.2f", kHeight - kMargin + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           xml_escape(fmt_sig6(xr.lo + f * (xr.hi - xr.lo))) + "</text>\n";
    svg += "<text x=\"" + fmt("%.2f", kMargin - 8.0) + "\" y=\"" +
           fmt("%.2f", gy + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           xml_escape(fmt_sig6(yr.lo + f * (yr.hi - yr.lo))) + "</text>\n";
  }
  svg += "<line x1=\"60\" y1=\"480\" x2=\"900\" y2=\"480\" stroke=\"#333333\" "
         "stroke-width=\"1\"/>\n";
  svg += "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"480\" stroke=\"#333333\" "
         "stroke-width=\"1\"/>\n";
  svg += "<text x=\"480\" y=\"525\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">" +
         xml_escape(x_label) + "</text>\n";
  svg += "<text x=\"18\" y=\"270\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\" "
         "transform=\"rotate(-90 18 270)\">" +
         xml_escape(y_label) + "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const SvgSeries& s = series[si];
    const char* color = kPalette[si % 6];
    std::string points;
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!points.empty()) points += ' ';
      points += fmt("%.2f", px(s.x[i])) + "," + fmt("%.2f", py(s.y[i]));
    }
    if (!points.empty()) {
      svg += "<polyline fill=\"none\" stroke=\"";
      svg += color;
      svg += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    }
    // Legend entry in the plot's top-right corner.
    const double ly = kMargin + 16.0 + 20.0 * static_cast<double>(si);
    svg += "<line x1=\"720\" y1=\"" + fmt("%.2f", ly - 4.0) +
           "\" x2=\"748\" y2=\"" + fmt("%.2f", ly - 4.0) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"754\" y=\"" + fmt("%.2f", ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" +
           xml_escape(s.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

}  // namespace auctionlab
