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

#ifndef HYPERCYC_LIMITS_HPP
#define HYPERCYC_LIMITS_HPP

#include <cstdint>

namespace hypercyc {

// Desk-scale ceilings. Exceeding either one raises ResourceCap instead of
// letting an exact computation run away.
struct ResourceLimits {
  // Largest bit length of any exact integer produced while searching for a
  // beta value or evaluating a factorial tail (n^b, m!, ...).
  std::uint64_t cap_bits = std::uint64_t{1} << 22;
  // Largest exponent that may be materialised in a series built by the
  // subspace and algebra constructions.
  std::uint64_t max_exponent = 10000;
};

}  // namespace hypercyc

#endif  // HYPERCYC_LIMITS_HPP
