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

#ifndef AUCTIONLAB_REPORT_HPP_
#define AUCTIONLAB_REPORT_HPP_

#include <string>
#include <vector>

namespace auctionlab {

// Numeric field formats: data rows carry 9 significant digits, header /
// summary lines 6.
std::string fmt_sig9(double x);
std::string fmt_sig6(double x);

// One CSV record with LF ending; fields containing commas, quotes, or line
// breaks are quoted with doubled inner quotes.
std::string csv_line(const std::vector<std::string>& fields);

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Self-contained 960x540 line chart: white canvas, 60 px margins, linear
// axes autoscaled over all finite points, five ticks per axis, 2 px
// polylines, legend in the plot's top-right corner. Non-finite points are
// dropped from their polyline.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series);

// Writes content atomically enough for a lab tool (single ofstream, flush
// checked); throws IoError when the path cannot be created or written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace auctionlab

#endif  // AUCTIONLAB_REPORT_HPP_
