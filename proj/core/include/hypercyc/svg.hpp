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


#ifndef HYPERCYC_SVG_HPP
#define HYPERCYC_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "hypercyc/report.hpp"

namespace hypercyc {

struct SvgOptions {
  std::string x_column = "k";
  std::string y_column;  // empty: first column ending in "_approx"
  std::string title;     // empty: the experiment id
  int width = 640;
  int height = 400;
};

// Line chart of y against x with a log10 vertical axis, one line per
// distinct combination of the remaining parameters. Zero values sit on the
// bottom edge as hollow markers. Output depends only on the input rows.
// Throws EmptyInput for no rows, BadArgument for mixed experiment ids or a
// missing column.
std::string render_convergence_svg(const std::vector<ReportRow>& rows, const SvgOptions& options = {});

void write_convergence_svg(const std::vector<ReportRow>& rows, const std::filesystem::path& path,
                           const SvgOptions& options = {});

}  // namespace hypercyc

#endif  // HYPERCYC_SVG_HPP
