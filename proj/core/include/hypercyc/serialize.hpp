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


// JSON forms of the library's result types. Series are embedded in the
// line-oriented text format of to_text; rationals as "num/den".

#ifndef HYPERCYC_SERIALIZE_HPP
#define HYPERCYC_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "hypercyc/algebra.hpp"
#include "hypercyc/enumeration.hpp"
#include "hypercyc/subspace.hpp"

namespace hypercyc {

std::string entry_to_json(const EnumerationEntry& e);
EnumerationEntry entry_from_json(std::string_view text);

std::string defect_report_to_json(const DefectReport& r);
DefectReport defect_report_from_json(std::string_view text);

std::string condition_report_to_json(const ConditionReport& r);

std::string state_to_json(const AlgebraState& state);
// Throws ParseError on malformed input and CertificateError when the decoded
// state does not re-verify.
AlgebraState state_from_json(std::string_view text);

}  // namespace hypercyc

#endif  // HYPERCYC_SERIALIZE_HPP
