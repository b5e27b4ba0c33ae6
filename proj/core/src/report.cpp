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


#include "hypercyc/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hypercyc/errors.hpp"

namespace hypercyc {

const std::string* ReportRow::find(std::string_view key) const {
  for (const auto* list : {&params, &values}) {
    for (const auto& [k, v] : *list) {
      if (k == key) return &v;
    }
  }
  return nullptr;
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool field_less(const std::string& a, const std::string& b) {
  if (all_digits(a) && all_digits(b)) {
    if (a.size() != b.size()) return a.size() < b.size();
  }
  return a < b;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
}

}  // namespace

void sort_rows(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& x, const ReportRow& y) {
    const std::size_t n = std::min(x.params.size(), y.params.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (field_less(x.params[i].second, y.params[i].second)) return true;
      if (field_less(y.params[i].second, x.params[i].second)) return false;
    }
    return x.params.size() < y.params.size();
  });
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  if (rows.empty()) return {};
  const ReportRow& first = rows.front();
  std::vector<std::string> header;
  for (const auto& [k, v] : first.params) header.push_back(k);
  for (const auto& [k, v] : first.values) header.push_back(k);
  const bool with_pass = first.pass.has_value();
  if (with_pass) header.push_back("pass");

  std::string out;
  append_line(out, header);
  for (const auto& row : rows) {
    if (row.params.size() != first.params.size() || row.values.size() != first.values.size() ||
        row.pass.has_value() != with_pass) {
      throw BadArgument("rows_to_csv: rows do not share a column layout");
    }
    std::vector<std::string> fields;
    for (std::size_t i = 0; i < row.params.size(); ++i) {
      if (row.params[i].first != first.params[i].first) throw BadArgument("rows_to_csv: column mismatch");
      fields.push_back(row.params[i].second);
    }
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      if (row.values[i].first != first.values[i].first) throw BadArgument("rows_to_csv: column mismatch");
      fields.push_back(row.values[i].second);
    }
    if (with_pass) fields.push_back(*row.pass ? "true" : "false");
    append_line(out, fields);
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, in_record = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c != '"') {
        field += c;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        quoted = false;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ParseError("csv: stray quote inside an unquoted field");
        quoted = in_record = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        in_record = true;
        break;
      case '\r':
        break;
      case '\n':
        record.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(record));
        record.clear();
        in_record = false;
        break;
      default:
        field += c;
        in_record = true;
    }
  }
  if (quoted) throw ParseError("csv: unterminated quoted field");
  if (in_record) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ReportRow> rows_from_csv(std::string_view text, std::string experiment, std::size_t param_count) {
  const auto records = parse_csv(text);
  if (records.empty()) throw EmptyInput("csv: no header row");
  const auto& header = records.front();
  if (header.size() < param_count) throw ParseError("csv: fewer columns than parameters");
  std::vector<ReportRow> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw ParseError("csv: record " + std::to_string(r) + " has " + std::to_string(rec.size()) + " fields, expected " +
                       std::to_string(header.size()));
    }
    ReportRow row;
    row.experiment = experiment;
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i < param_count) {
        row.params.emplace_back(header[i], rec[i]);
      } else if (header[i] == "pass") {
        if (rec[i] != "true" && rec[i] != "false") throw ParseError("csv: pass must be true or false");
        row.pass = rec[i] == "true";
      } else {
        row.values.emplace_back(header[i], rec[i]);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string decimal_approx(const Rational& q, int digits) {
  if (digits < 1) throw BadArgument("decimal_approx: digits must be positive");
  if (sgn(q) == 0) return "0";
  const Rational x = abs_value(q);
  // Initial guess for floor(log10 x) from bit lengths, then corrected.
  const long bits = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  long e = static_cast<long>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
  auto pow10 = [](long n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(n < 0 ? -n : n));
    return n < 0 ? Rational(Integer(1), r) : Rational(r);
  };
  while (x >= pow10(e + 1)) ++e;
  while (x < pow10(e)) --e;

  const Rational scaled = x * pow10(digits - 1 - e);
  Integer n, rem;
  mpz_fdiv_qr(n.get_mpz_t(), rem.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const int half = cmp(Integer(2 * rem), scaled.get_den());
  if (half > 0 || (half == 0 && mpz_odd_p(n.get_mpz_t()))) ++n;
  std::string s = n.get_str();
  if (s.size() > static_cast<std::size_t>(digits)) {  // rounded up to the next power of ten
    s.pop_back();
    ++e;
  }
  std::string out = sgn(q) < 0 ? "-" : "";
  out += s[0];
  if (digits > 1) out += "." + s.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

std::optional<double> decimal_log10(std::string_view text) {
  if (text == "0") return std::nullopt;
  const auto epos = text.find('e');
  std::string mant(text.substr(0, epos));
  long exp = 0;
  if (epos != std::string_view::npos) exp = std::stol(std::string(text.substr(epos + 1)));
  double m = std::stod(mant);
  if (m < 0) m = -m;
  if (m == 0.0) return std::nullopt;
  return std::log10(m) + static_cast<double>(exp);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadArgument("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw BadArgument("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void check_writable(const std::filesystem::path& path) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw BadArgument("output directory does not exist: " + dir.string());
  std::filesystem::path probe = dir / ".hypercyc-write-probe";
  {
    std::ofstream out(probe);
    if (!out) throw BadArgument("output directory is not writable: " + dir.string());
  }
  std::filesystem::remove(probe, ec);
}

}  // namespace hypercyc
