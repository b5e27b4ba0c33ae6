// Copyright 2026 The hypercyc Authors.
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


#include "hypercyc/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "hypercyc/errors.hpp"

namespace hypercyc {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape_xml(const std::string& s) {
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

struct Point {
  double x;
  std::optional<double> log_y;
};

}  // namespace

std::string render_convergence_svg(const std::vector<ReportRow>& rows, const SvgOptions& options) {
  if (rows.empty()) throw EmptyInput("render_convergence_svg: no rows");
  const std::string& experiment = rows.front().experiment;
  std::string y_column = options.y_column;
  if (y_column.empty()) {
    for (const auto& [k, v] : rows.front().values) {
      if (k.size() > 7 && k.compare(k.size() - 7, 7, "_approx") == 0) {
        y_column = k;
        break;
      }
    }
    if (y_column.empty()) throw BadArgument("render_convergence_svg: no decimal column");
  }

  std::map<std::string, std::vector<Point>> lines;
  for (const auto& row : rows) {
    if (row.experiment != experiment) throw BadArgument("render_convergence_svg: rows mix experiments");
    const std::string* xs = row.find(options.x_column);
    const std::string* ys = row.find(y_column);
    if (!xs || !ys) throw BadArgument("render_convergence_svg: row lacks " + options.x_column + " or " + y_column);
    std::string label;
    for (const auto& [k, v] : row.params) {
      if (k == options.x_column) continue;
      if (!label.empty()) label += ", ";
      label += k + "=" + v;
    }
    lines[label].push_back({std::stod(*xs), decimal_log10(*ys)});
  }

  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (auto& [label, pts] : lines) {
    std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (const auto& p : pts) {
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      if (p.log_y) {
        y_lo = std::min(y_lo, *p.log_y);
        y_hi = std::max(y_hi, *p.log_y);
      }
    }
  }
  if (x_lo == x_hi) {
    x_lo -= 1;
    x_hi += 1;
  }
  if (y_lo > y_hi) {  // every value is zero
    y_lo = -1;
    y_hi = 0;
  }
  y_lo = std::floor(y_lo) - 1;  // room for zero markers
  y_hi = std::ceil(y_hi);
  if (y_lo == y_hi) y_hi += 1;

  const double left = 80, right = options.width - 150, top = 40, bottom = options.height - 50;
  auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (right - left); };
  auto py = [&](double ly) { return bottom - (ly - y_lo) / (y_hi - y_lo) * (bottom - top); };

  std::string svg;
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      options.width, options.height, options.width, options.height);
  svg += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", options.width, options.height);
  svg += fmt::format("<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                     (left + right) / 2, escape_xml(options.title.empty() ? experiment : options.title));
  svg += fmt::format(
      "<path d=\"M{:.2f},{:.2f} L{:.2f},{:.2f} L{:.2f},{:.2f}\" fill=\"none\" stroke=\"black\"/>\n", left, top, left,
      bottom, right, bottom);

  const double span = y_hi - y_lo;
  const double step = std::max(1.0, std::ceil(span / 8));
  for (double t = y_lo; t <= y_hi + 1e-9; t += step) {
    svg += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#dddddd\"/>"
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">1e{}</text>\n",
        left, py(t), right, py(t), left - 6, py(t) + 4, static_cast<long>(t));
  }
  std::vector<double> xticks;
  for (const auto& [label, pts] : lines) {
    for (const auto& p : pts) xticks.push_back(p.x);
  }
  std::sort(xticks.begin(), xticks.end());
  xticks.erase(std::unique(xticks.begin(), xticks.end()), xticks.end());
  for (double x : xticks) {
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", px(x), bottom + 18, x);
  }
  svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", (left + right) / 2,
                     bottom + 38, escape_xml(options.x_column));
  svg += fmt::format(
      "<text x=\"16\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.2f})\">{} (log scale)</text>\n",
      (top + bottom) / 2, (top + bottom) / 2, escape_xml(y_column));

  std::size_t index = 0;
  for (const auto& [label, pts] : lines) {
    const char* color = kPalette[index % std::size(kPalette)];
    std::string d;
    for (const auto& p : pts) {
      d += fmt::format("{}{:.2f},{:.2f}", d.empty() ? "M" : " L", px(p.x), py(p.log_y.value_or(y_lo)));
    }
    svg += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n", d, color);
    for (const auto& p : pts) {
      svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3.5\" fill=\"{}\" stroke=\"{}\"/>\n", px(p.x),
                         py(p.log_y.value_or(y_lo)), p.log_y ? color : "white", color);
    }
    const double ly = top + 16.0 * static_cast<double>(index);
    svg += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"2\"/>"
        "<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n",
        right + 12, ly, right + 32, ly, color, right + 38, ly + 4, escape_xml(label.empty() ? y_column : label));
    ++index;
  }
  svg += "</svg>\n";
  return svg;
}

void write_convergence_svg(const std::vector<ReportRow>& rows, const std::filesystem::path& path,
                           const SvgOptions& options) {
  write_text_file(path, render_convergence_svg(rows, options));
}

}  // namespace hypercyc
