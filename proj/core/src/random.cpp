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


#include "hypercyc/random.hpp"

#include <algorithm>
#include <set>

#include "hypercyc/errors.hpp"

namespace hypercyc {

std::uint64_t SeriesGenerator::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw BadArgument("uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return rng_();
  return lo + rng_() % (span + 1);
}

Rational SeriesGenerator::rational(long max_numerator, long max_denominator) {
  const long num = static_cast<long>(uniform(0, 2 * static_cast<std::uint64_t>(max_numerator))) - max_numerator;
  const long den = static_cast<long>(uniform(1, static_cast<std::uint64_t>(max_denominator)));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational SeriesGenerator::gaussian(long max_numerator, long max_denominator) {
  Rational re = rational(max_numerator, max_denominator);
  Rational im = coin() ? rational(max_numerator, max_denominator) : Rational(0);
  return GaussianRational(std::move(re), std::move(im));
}

GaussianRational SeriesGenerator::nonzero_gaussian(long max_numerator, long max_denominator) {
  for (;;) {
    GaussianRational g = gaussian(max_numerator, max_denominator);
    if (!g.is_zero()) return g;
  }
}

SparseSeries SeriesGenerator::series(const RandomSeriesSpec& spec) {
  const std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(spec.max_terms, spec.max_degree + 1));
  const std::size_t count = static_cast<std::size_t>(uniform(1, std::max<std::size_t>(cap, 1)));
  std::set<Exponent> exps;
  while (exps.size() < count) exps.insert(uniform(0, spec.max_degree));
  SeriesBuilder b;
  for (Exponent e : exps) b.push(e, nonzero_gaussian(spec.max_numerator, spec.max_denominator));
  return std::move(b).build();
}

}  // namespace hypercyc
