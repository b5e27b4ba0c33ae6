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

#include <cmath>
#include <mutex>

#include "hypercyc/enumeration.hpp"
#include "hypercyc/errors.hpp"

namespace hypercyc {

std::uint64_t BetaTable::at(std::size_t k) const {
  if (k == 0 || k > values_.size()) {
    throw IndexNotCovered("beta(" + std::to_string(k) + ") is outside a table of size " +
                          std::to_string(values_.size()));
  }
  return values_[k - 1];
}

bool power_fits_in_pow2(std::uint64_t n, std::uint64_t b) {
  if (b == 0 || n <= 1) return true;
  Integer x;
  mpz_ui_pow_ui(x.get_mpz_t(), n, b);
  const auto bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (bits <= n) return true;
  if (bits > n + 1) return false;
  return mpz_scan1(x.get_mpz_t(), 0) == n;  // x == 2^n exactly
}

namespace {

// Floating pre-screen; falls back to the exact test near the boundary.
bool fits(std::uint64_t n, std::uint64_t b) {
  const double lhs = static_cast<double>(b) * std::log2(static_cast<double>(n));
  const double rhs = static_cast<double>(n);
  if (lhs < rhs - 2.0) return true;
  if (lhs > rhs + 2.0) return false;
  return power_fits_in_pow2(n, b);
}

// Approximate least n >= lo with b log2 n <= n.
double estimate_next(std::uint64_t b, std::uint64_t lo) {
  double n = static_cast<double>(lo);
  for (int it = 0; it < 64; ++it) {
    const double next = static_cast<double>(b) * std::log2(n);
    if (next <= n) break;
    n = next;
  }
  return n;
}

std::uint64_t next_beta(std::uint64_t b, std::uint64_t k, const ResourceLimits& limits) {
  const std::uint64_t lo = b + k + 1;
  // The exact witness n^b has about n bits.
  const double est = estimate_next(b, lo);
  if (est > static_cast<double>(limits.cap_bits)) {
    throw ResourceCap("beta(" + std::to_string(k + 1) + ") needs integers of about " +
                      std::to_string(static_cast<std::uint64_t>(est)) + " bits (cap " +
                      std::to_string(limits.cap_bits) + ")");
  }
  std::uint64_t answer = lo;
  if (!fits(lo, b)) {
    std::uint64_t low = lo;  // fails
    std::uint64_t high = std::max<std::uint64_t>(lo + 1, static_cast<std::uint64_t>(est));
    while (!fits(high, b)) {
      low = high;
      high *= 2;
    }
    while (high - low > 1) {
      const std::uint64_t mid = low + (high - low) / 2;
      if (fits(mid, b)) {
        high = mid;
      } else {
        low = mid;
      }
    }
    answer = high;
  }
  // Exact confirmation of the answer and of its predecessor.
  if (!power_fits_in_pow2(answer, b) ||
      (answer - 1 > b + k && power_fits_in_pow2(answer - 1, b))) {
    throw Error("beta search lost minimality at step " + std::to_string(k));
  }
  return answer;
}

std::mutex beta_mutex;
std::vector<std::uint64_t> beta_memo{1};

}  // namespace

BetaTable beta(std::size_t K, const ResourceLimits& limits) {
  if (K == 0) throw BadArgument("beta: K must be positive");
  std::lock_guard<std::mutex> lock(beta_mutex);
  try {
    while (beta_memo.size() < K) {
      const std::uint64_t k = beta_memo.size();
      beta_memo.push_back(next_beta(beta_memo.back(), k, limits));
    }
  } catch (const ResourceCap& e) {
    throw ResourceCap("beta(" + std::to_string(K) + ") unavailable: " + e.what());
  }
  // Memo may hold values computed under a looser cap; re-apply this one.
  for (std::size_t k = 1; k < K; ++k) {
    if (beta_memo[k] > limits.cap_bits) {
      throw ResourceCap("beta(" + std::to_string(K) + ") unavailable: beta(" +
                        std::to_string(k + 1) + ") exceeds the cap of " +
                        std::to_string(limits.cap_bits) + " bits");
    }
  }
  return BetaTable(std::vector<std::uint64_t>(beta_memo.begin(), beta_memo.begin() + K));
}

std::optional<BetaViolation> check_beta_table(const BetaTable& table) {
  if (table.size() == 0) return std::nullopt;
  if (table.at(1) != 1) return BetaViolation{0, "beta(1) != 1"};
  for (std::size_t k = 1; k < table.size(); ++k) {
    const std::uint64_t b = table.at(k);
    const std::uint64_t n = table.at(k + 1);
    if (n <= b + k) return BetaViolation{k, "beta(k+1) <= beta(k) + k"};
    if (!power_fits_in_pow2(n, b)) return BetaViolation{k, "beta(k+1)^beta(k) > 2^beta(k+1)"};
    const std::uint64_t prev = n - 1;
    if (prev > b + k && power_fits_in_pow2(prev, b)) {
      return BetaViolation{k, "beta(k+1) - 1 already satisfies both constraints"};
    }
  }
  return std::nullopt;
}

}  // namespace hypercyc
