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


#include "hypercyc/serialize.hpp"

#include "json.hpp"

namespace hypercyc {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Wraps field access so that type and presence errors surface as ParseError.
template <typename T>
T field(const Json& obj, const char* key) {
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Rational rational_field(const Json& obj, const char* key) { return parse_rational(field<std::string>(obj, key)); }

Json comparison_json(const Comparison& c) {
  return Json{{"condition", condition_name(c.condition)},
              {"j", c.j},
              {"nu", c.nu},
              {"lhs", format_rational(c.lhs)},
              {"rhs", format_rational(c.rhs)}};
}

Comparison comparison_from(const Json& obj) {
  Comparison c;
  c.condition = parse_condition_name(field<std::string>(obj, "condition"));
  c.j = field<std::uint64_t>(obj, "j");
  c.nu = field<std::uint64_t>(obj, "nu");
  c.lhs = rational_field(obj, "lhs");
  c.rhs = rational_field(obj, "rhs");
  return c;
}

}  // namespace

std::string entry_to_json(const EnumerationEntry& e) {
  return Json{{"k", e.k}, {"d", e.d}, {"p", to_text(e.p)}}.dump(2);
}

EnumerationEntry entry_from_json(std::string_view text) {
  const Json j = parse_json(text);
  return {field<std::uint64_t>(j, "k"), field<std::uint64_t>(j, "d"), parse_series_text(field<std::string>(j, "p"))};
}

std::string defect_report_to_json(const DefectReport& r) {
  return Json{{"k", r.k},
              {"a", r.a},
              {"lower", format_rational(r.truncated_value.lower)},
              {"upper", format_rational(r.truncated_value.upper)},
              {"tail_upper", format_rational(r.tail_upper)},
              {"total_upper", format_rational(r.total_upper)}}
      .dump(2);
}

DefectReport defect_report_from_json(std::string_view text) {
  const Json j = parse_json(text);
  DefectReport r;
  r.k = field<std::uint64_t>(j, "k");
  r.a = field<std::uint64_t>(j, "a");
  r.truncated_value = {rational_field(j, "lower"), rational_field(j, "upper"), r.a};
  r.tail_upper = rational_field(j, "tail_upper");
  r.total_upper = rational_field(j, "total_upper");
  return r;
}

std::string condition_report_to_json(const ConditionReport& r) {
  Json j{{"step", r.step}, {"candidate", r.candidate}, {"passed", r.passed}};
  j["first_failure"] = r.first_failure ? comparison_json(*r.first_failure) : Json(nullptr);
  j["comparisons_evaluated"] = r.comparisons.size();
  return j.dump(2);
}

std::string state_to_json(const AlgebraState& state) {
  Json n = Json::array(), d = Json::array(), nu = Json::array(), p = Json::array(), blocks = Json::array();
  Json certs = Json::array();
  for (std::size_t i = 0; i < state.steps.size(); ++i) {
    const StepRecord& s = state.steps[i];
    n.push_back(s.n);
    d.push_back(s.d);
    nu.push_back(s.nu);
    p.push_back(to_text(s.p));
    blocks.push_back(to_text(s.block));
    for (const auto& c : s.certificates) {
      Json cj{{"step", i + 1}};
      cj.update(comparison_json(c));
      certs.push_back(std::move(cj));
    }
  }
  Json j{{"K", state.size()}, {"n", n},           {"d", d},
         {"nu", nu},          {"p", p},           {"blocks", blocks},
         {"partial", to_text(state.partial)},      {"certificates", certs}};
  return j.dump(2) + "\n";
}

AlgebraState state_from_json(std::string_view text) {
  const Json j = parse_json(text);
  const auto K = field<std::uint64_t>(j, "K");
  const auto n = field<std::vector<std::uint64_t>>(j, "n");
  const auto d = field<std::vector<std::uint64_t>>(j, "d");
  const auto nu = field<std::vector<std::uint64_t>>(j, "nu");
  const auto p = field<std::vector<std::string>>(j, "p");
  const auto blocks = field<std::vector<std::string>>(j, "blocks");
  if (n.size() != K || d.size() != K || nu.size() != K || p.size() != K || blocks.size() != K) {
    throw ParseError("state: per-step arrays must all have length K");
  }
  AlgebraState state;
  for (std::uint64_t i = 0; i < K; ++i) {
    state.steps.push_back({n[i], d[i], nu[i], parse_series_text(p[i]), parse_series_text(blocks[i]), {}});
  }
  state.partial = parse_series_text(field<std::string>(j, "partial"));
  if (!j.contains("certificates") || !j["certificates"].is_array()) throw ParseError("state: missing certificates");
  for (const Json& cj : j["certificates"]) {
    const auto step = field<std::uint64_t>(cj, "step");
    if (step == 0 || step > K) throw ParseError("state: certificate refers to step " + std::to_string(step));
    state.steps[step - 1].certificates.push_back(comparison_from(cj));
  }
  if (const VerificationResult v = verify_state(state); !v.ok) {
    throw CertificateError("state failed re-verification: " + v.detail);
  }
  return state;
}

}  // namespace hypercyc
