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


#include "hypercyc/experiments.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hypercyc/enumeration.hpp"
#include "json.hpp"

namespace hypercyc {

namespace {

using Json = nlohmann::json;

template <typename T>
T get(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError("config key '" + key + "': " + e.what());
  }
}

SparseSeries parse_inline_series(std::string text) {
  std::replace(text.begin(), text.end(), ';', '\n');
  return parse_series_text(text);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string re, im, extra;
  in >> re >> im >> extra;
  if (re.empty() || !extra.empty()) throw ParseError("expected 're' or 're im', got '" + std::string(text) + "'");
  return GaussianRational(parse_rational(re), im.empty() ? Rational(0) : parse_rational(im));
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");

  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      c.seed = get<std::uint64_t>(j, key);
    } else if (key == "cases") {
      c.cases = get<std::uint64_t>(j, key);
    } else if (key == "inject_fault") {
      c.inject_fault = get<bool>(j, key);
    } else if (key == "coeffs") {
      if (!value.is_object()) throw ParseError("config key 'coeffs' must be an object");
      c.coeffs.clear();
      for (const auto& [d, v] : value.items()) {
        std::uint64_t idx = 0;
        try {
          std::size_t used = 0;
          idx = std::stoull(d, &used);
          if (used != d.size()) throw std::invalid_argument(d);
        } catch (const std::exception&) {
          throw ParseError("coeffs: '" + d + "' is not a class index");
        }
        if (!v.is_string()) throw ParseError("coeffs: values are strings 're' or 're im'");
        c.coeffs[idx] = parse_gaussian(v.get<std::string>());
      }
    } else if (key == "cutoff") {
      c.cutoff = get<std::uint64_t>(j, key);
    } else if (key == "k_list") {
      c.k_list = get<std::vector<std::uint64_t>>(j, key);
    } else if (key == "norm_bases") {
      c.norm_bases = get<std::vector<std::uint64_t>>(j, key);
    } else if (key == "K") {
      c.K = get<std::uint64_t>(j, key);
    } else if (key == "search_cap") {
      c.search_cap = get<std::uint64_t>(j, key);
    } else if (key == "defects") {
      if (!value.is_array()) throw ParseError("config key 'defects' must be an array");
      for (const auto& q : value) {
        c.defects.push_back({parse_inline_series(get<std::string>(q, "poly")), get<std::uint64_t>(q, "k"),
                             get<std::uint64_t>(q, "m")});
      }
    } else if (key == "resource_cap_bits") {
      c.limits.cap_bits = get<std::uint64_t>(j, key);
    } else if (key == "max_exponent") {
      c.limits.max_exponent = get<std::uint64_t>(j, key);
    } else if (key == "out") {
      c.out = get<std::string>(j, key);
    } else if (key == "state") {
      c.state = get<std::string>(j, key);
    } else if (key == "in") {
      c.in = get<std::string>(j, key);
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  return c;
}

void validate_config(const ExperimentConfig& c) {
  if (c.limits.cap_bits == 0) throw BadArgument("resource_cap_bits must be positive");
  if (c.limits.max_exponent == 0) throw BadArgument("max_exponent must be positive");
  if (c.K == 0) throw BadArgument("K must be positive");
  if (c.search_cap == 0) throw BadArgument("search_cap must be positive");
  if (c.k_list.empty()) throw BadArgument("k_list must not be empty");
  if (c.norm_bases.empty()) throw BadArgument("norm_bases must not be empty");
  for (auto k : c.k_list) {
    if (k == 0) throw BadArgument("k_list entries are positive");
  }
  for (auto a : c.norm_bases) {
    if (a == 0) throw BadArgument("norm bases are positive");
  }
  for (const auto& [d, cd] : c.coeffs) {
    if (d == 0) throw BadArgument("coeffs: class indices are positive");
  }
}

SubspaceResult run_subspace_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const std::uint64_t top = *std::max_element(config.k_list.begin(), config.k_list.end());
  for (std::uint64_t k : config.k_list) {
    const BetaTable table = beta(k, config.limits);
    if (table.at(k) > config.limits.max_exponent) {
      throw ResourceCap("beta(" + std::to_string(k) + ") = " + std::to_string(table.at(k)) +
                        " exceeds max_exponent " + std::to_string(config.limits.max_exponent));
    }
  }
  const std::uint64_t cutoff = config.cutoff ? config.cutoff : top;
  if (top > cutoff) throw BadArgument("k_list entry " + std::to_string(top) + " exceeds cutoff");

  const SubspaceTruncation t = combination(config.coeffs, cutoff, config.limits);
  SubspaceResult result;
  for (std::uint64_t a : config.norm_bases) {
    for (std::uint64_t k : config.k_list) {
      DefectReport r = orbit_defect(t, k, a, config.limits);
      result.rows.push_back({"subspace",
                             {{"k", std::to_string(k)}, {"a", std::to_string(a)}},
                             {{"lower", format_rational(r.truncated_value.lower)},
                              {"upper", format_rational(r.truncated_value.upper)},
                              {"tail_upper", format_rational(r.tail_upper)},
                              {"total_upper", format_rational(r.total_upper)},
                              {"total_upper_approx", decimal_approx(r.total_upper)}},
                             std::nullopt});
      result.reports.push_back(std::move(r));
    }
  }
  sort_rows(result.rows);
  std::stable_sort(result.reports.begin(), result.reports.end(), [](const DefectReport& x, const DefectReport& y) {
    return std::tie(x.k, x.a) < std::tie(y.k, y.a);
  });
  return result;
}

AlgebraResult run_algebra_experiment(const ExperimentConfig& config, const AlgebraState& resume,
                                     const StepCallback& on_step) {
  validate_config(config);
  AlgebraResult result;
  result.state = resume;
  if (result.state.size() > config.K) {
    result.state.steps.resize(config.K);
    result.state.partial = SparseSeries();
    for (const auto& s : result.state.steps) result.state.partial = result.state.partial + s.block;
  }
  while (result.state.size() < config.K) {
    result.state = extend(result.state, config.search_cap, config.limits);
    if (on_step) on_step(result.state);
  }

  std::vector<DefectQuery> queries = config.defects;
  if (queries.empty()) {
    for (std::uint64_t k = 1; k <= config.K; ++k) {
      for (std::uint64_t m = 1; m <= k; ++m) queries.push_back({SparseSeries::monomial(entry(k).d), k, m});
    }
  }
  for (const auto& q : queries) {
    const NormBounds nb = algebra_defect(result.state, q.p, q.k, q.m);
    const Rational bound = algebra_defect_bound(q.p, q.k);
    const bool pass = nb.upper <= bound;
    result.all_pass = result.all_pass && pass;
    result.rows.push_back({"algebra",
                           {{"k", std::to_string(q.k)}, {"m", std::to_string(q.m)}, {"poly", to_pretty(q.p)}},
                           {{"upper", format_rational(nb.upper)},
                            {"bound", format_rational(bound)},
                            {"upper_approx", decimal_approx(nb.upper)}},
                           pass});
  }
  sort_rows(result.rows);
  return result;
}

}  // namespace hypercyc
