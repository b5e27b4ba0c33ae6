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


// Seeded generators for property batteries. Only the raw 64-bit engine
// output is used (reduced modulo the range), so a seed produces the same
// cases with every standard library.

#ifndef HYPERCYC_RANDOM_HPP
#define HYPERCYC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "hypercyc/series.hpp"

namespace hypercyc {

struct RandomSeriesSpec {
  std::uint64_t max_degree = 60;
  std::size_t max_terms = 12;
  long max_numerator = 50;
  long max_denominator = 20;
};

class SeriesGenerator {
 public:
  explicit SeriesGenerator(std::uint64_t seed) : rng_(seed) {}

  // Uniform on [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(long max_numerator, long max_denominator);
  GaussianRational gaussian(long max_numerator, long max_denominator);
  GaussianRational nonzero_gaussian(long max_numerator, long max_denominator);
  // At least one term, distinct exponents, nonzero coefficients.
  SparseSeries series(const RandomSeriesSpec& spec = {});

 private:
  std::mt19937_64 rng_;
};

}  // namespace hypercyc

#endif  // HYPERCYC_RANDOM_HPP
