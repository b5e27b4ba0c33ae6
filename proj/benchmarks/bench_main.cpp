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


#include <benchmark/benchmark.h>

#include "hypercyc/algebra.hpp"
#include "hypercyc/enumeration.hpp"
#include "hypercyc/random.hpp"
#include "hypercyc/subspace.hpp"

namespace {

using namespace hypercyc;

void BM_Multiply(benchmark::State& state) {
  SeriesGenerator gen(7);
  const RandomSeriesSpec spec{static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(0)), 50,
                              20};
  const SparseSeries f = gen.series(spec), g = gen.series(spec);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
}
BENCHMARK(BM_Multiply)->Arg(16)->Arg(64)->Arg(256);

void BM_DerivativeSweep(benchmark::State& state) {
  const SparseSeries f = power(r_block({1, SparseSeries::constant(1)}, 9), 2);
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    SparseSeries cur = f;
    for (std::uint64_t nu = 0; nu < steps; ++nu) {
      cur = derivative_n(cur, 1);
      benchmark::DoNotOptimize(upper_norm(cur, 3));
    }
  }
}
BENCHMARK(BM_DerivativeSweep)->Arg(10)->Arg(100);

void BM_DerivativeDirect(benchmark::State& state) {
  const SparseSeries f = power(r_block({1, SparseSeries::constant(1)}, 9), 2);
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t nu = 1; nu <= steps; ++nu) benchmark::DoNotOptimize(upper_norm(derivative_n(f, nu), 3));
  }
}
BENCHMARK(BM_DerivativeDirect)->Arg(10)->Arg(100);

void BM_EnumerationEntry(benchmark::State& state) {
  std::uint64_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(entry(k));
    k = k % 5000 + 1;
  }
}
BENCHMARK(BM_EnumerationEntry);

void BM_BetaTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(beta(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BetaTable)->Arg(7);

void BM_OrbitDefect(benchmark::State& state) {
  const SubspaceTruncation t = combination(CoeffMap{{1, GaussianRational(1)}}, 6);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_defect(t, static_cast<std::uint64_t>(state.range(0)), 1));
}
BENCHMARK(BM_OrbitDefect)->Arg(3)->Arg(6);

void BM_Construct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct(static_cast<std::uint64_t>(state.range(0)), 200));
}
BENCHMARK(BM_Construct)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
