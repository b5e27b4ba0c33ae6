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


#ifndef HYPERCYC_BATTERY_HPP
#define HYPERCYC_BATTERY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hypercyc/limits.hpp"
#include "hypercyc/report.hpp"

namespace hypercyc {

struct BatteryConfig {
  std::uint64_t seed = 1;
  std::uint64_t cases = 100;  // per check
  // Negates the outcome of one sandwich comparison so the harness can be
  // seen to fail.
  bool inject_fault = false;
  ResourceLimits limits;
};

struct BatteryResult {
  // One row per check that ran at least one case: params suite, check;
  // values cases, violations, first_input.
  std::vector<ReportRow> rows;
  std::uint64_t violations = 0;
  // Replayable description of every violating case.
  std::vector<std::string> violating_inputs;

  bool ok() const { return violations == 0; }
};

BatteryResult run_battery(const BatteryConfig& config);

}  // namespace hypercyc

#endif  // HYPERCYC_BATTERY_HPP
