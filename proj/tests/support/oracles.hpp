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


// Slow, obviously-correct reference implementations. Nothing here calls the
// arithmetic under test beyond constructing and reading SparseSeries terms.

#ifndef HYPERCYC_TESTS_ORACLES_HPP
#define HYPERCYC_TESTS_ORACLES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hypercyc/series.hpp"

namespace oracle {

using hypercyc::Integer;
using hypercyc::Rational;
using hypercyc::SparseSeries;

struct Complex {
  Rational re, im;
};

// Dense coefficient vector, index = exponent.
using Dense = std::vector<Complex>;

Dense to_dense(const SparseSeries& f);
SparseSeries from_dense(const Dense& d);

Dense derivative(Dense f, std::uint64_t n);  // n single-step derivatives
Dense volterra(Dense f, std::uint64_t n);    // n single-step integrations
Dense multiply(const Dense& f, const Dense& g);
Dense add(const Dense& f, const Dense& g);

Rational box_norm(const Dense& f, std::uint64_t a);
Rational max_norm(const Dense& f, std::uint64_t a);

// Least n > b + k with n^b <= 2^n, by linear scan.
std::vector<std::uint64_t> beta_scan(std::size_t K);

// k -> (m, j) by walking the diagonals m + j = 2, 3, ...
std::vector<std::pair<std::uint64_t, std::uint64_t>> diagonal_walk(std::uint64_t count);

// Breadth-first Stern-Brocot tree, entry t - 1 holds node t.
std::vector<Rational> stern_brocot_nodes(std::size_t count);

// The documented raw enumeration, rebuilt from the walk and the tree above.
SparseSeries raw_poly(std::uint64_t i);

}  // namespace oracle

#endif  // HYPERCYC_TESTS_ORACLES_HPP
