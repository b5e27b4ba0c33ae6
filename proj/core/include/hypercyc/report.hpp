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


#ifndef HYPERCYC_REPORT_HPP
#define HYPERCYC_REPORT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercyc/gaussian.hpp"

namespace hypercyc {

using Field = std::pair<std::string, std::string>;

// One line of an experiment report. Params identify the row, values carry
// the results (exact rationals as "num/den", advisory decimals in columns
// whose name ends in "_approx").
struct ReportRow {
  std::string experiment;
  std::vector<Field> params;
  std::vector<Field> values;
  std::optional<bool> pass;

  const std::string* find(std::string_view key) const;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

// Orders rows by their parameter tuple; all-digit fields compare numerically.
void sort_rows(std::vector<ReportRow>& rows);

// RFC 4180 with a header row: params, then values, then "pass" when the
// first row has a verdict. Every row must share the first row's columns.
std::string rows_to_csv(const std::vector<ReportRow>& rows);
// Inverse of rows_to_csv; the first param_count columns become params.
std::vector<ReportRow> rows_from_csv(std::string_view text, std::string experiment, std::size_t param_count);

std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Round-to-nearest (ties to even) decimal with the given number of
// significant digits, e.g. "1.2500000000000000000e-3". Zero prints as "0".
std::string decimal_approx(const Rational& q, int digits = 20);
// log10 of a decimal_approx string; nullopt for zero.
std::optional<double> decimal_log10(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
// Writes through a temporary file and a rename so readers never observe a
// partially written file.
void write_text_file(const std::filesystem::path& path, std::string_view contents);
// Throws BadArgument when the parent directory cannot be written.
void check_writable(const std::filesystem::path& path);

}  // namespace hypercyc

#endif  // HYPERCYC_REPORT_HPP
