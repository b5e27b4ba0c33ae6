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


// One line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "hypercyc/algebra.hpp"
#include "hypercyc/battery.hpp"
#include "hypercyc/enumeration.hpp"
#include "hypercyc/random.hpp"
#include "hypercyc/report.hpp"
#include "hypercyc/serialize.hpp"
#include "hypercyc/subspace.hpp"
#include "oracles.hpp"

namespace {

using namespace hypercyc;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool run_criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_seconds) out.fail("exceeded the " + std::to_string(limit_seconds) + " s budget");
  std::printf("[%s] criterion %d: %s (%s; %.2f s)\n", out.ok ? "PASS" : "FAIL", id, title.c_str(),
              out.detail.c_str(), secs);
  std::fflush(stdout);
  return out.ok;
}

Outcome operator_identities() {
  Outcome o;
  SeriesGenerator gen(20260101);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const SparseSeries f = gen.series({60, 12, 50, 20});
    for (std::uint64_t n : {1, 3, 10}) {
      const SparseSeries v = volterra_n(f, n);
      if (derivative_n(v, n) != f) o.fail("D^n V^n f != f at case " + std::to_string(i));
      if (v != oracle::from_dense(oracle::volterra(oracle::to_dense(f), n))) {
        o.fail("V^n disagrees with the dense oracle at case " + std::to_string(i));
      }
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " identities exact";
  return o;
}

Outcome norm_suite() {
  Outcome o;
  BatteryConfig cfg;
  cfg.seed = 2026;
  cfg.cases = 500;
  const BatteryResult r = run_battery(cfg);
  const std::vector<std::string> wanted{"monotone", "submultiplicative", "derivative-bound", "volterra-bound",
                                        "sandwich"};
  for (const auto& name : wanted) {
    bool found = false;
    for (const auto& row : r.rows) {
      if (*row.find("check") != name) continue;
      found = true;
      if (*row.find("cases") != "500") o.fail(name + " ran " + *row.find("cases") + " cases");
      if (*row.find("violations") != "0") o.fail(name + " violated: " + *row.find("first_input"));
    }
    if (!found) o.fail("no row for " + name);
  }
  if (o.ok) o.detail = "5 checks x 500 cases, 0 violations";
  return o;
}

Outcome enumeration() {
  Outcome o;
  for (std::uint64_t k = 1; k <= 5000; ++k) {
    const EnumerationEntry e = entry(k);
    if (e.d > k) o.fail("d_k > k at k=" + std::to_string(k));
    if (!PolyClassSpec{k, Rational(k)}.contains(e.p)) o.fail("p_k outside P_{k,k} at k=" + std::to_string(k));
  }
  const auto walk = oracle::diagonal_walk(1000000);
  for (std::uint64_t k = 1; k <= 1000000; ++k) {
    const auto mj = unpair(k);
    if (mj != walk[k - 1] || pair(mj.first, mj.second) != k) {
      o.fail("pair/unpair mismatch at k=" + std::to_string(k));
      break;
    }
  }
  int witnesses = 0;
  for (std::uint64_t d = 1; d <= 3; ++d) {
    for (std::uint64_t i = 1; i <= 10; ++i) {
      const SparseSeries t = oracle::raw_poly(i);
      std::uint64_t l = 1;
      while (dense_poly(pair(i, l)) != t) {
        if (++l > 100000) {
          o.fail("no witness for t_" + std::to_string(i));
          return o;
        }
      }
      const EnumerationEntry e = entry(pair(d, pair(i, l)));
      if (e.d != d || e.p != t) o.fail("witness mismatch at d=" + std::to_string(d) + " i=" + std::to_string(i));
      ++witnesses;
    }
  }
  if (o.ok) o.detail = "k<=5000 gated, 1e6 round trips, " + std::to_string(witnesses) + " witnesses";
  return o;
}

Outcome beta_sequence() {
  Outcome o;
  const BetaTable table = beta(6);
  const auto scan = oracle::beta_scan(6);
  for (std::size_t k = 1; k <= 6; ++k) {
    if (table.at(k) != scan[k - 1]) o.fail("beta(" + std::to_string(k) + ") differs from the scan");
  }
  if (table.at(2) != 3 || table.at(3) != 10 || table.at(4) != 59) o.fail("beta(2..4) != 3, 10, 59");
  for (std::size_t k = 1; k < 6; ++k) {
    const std::uint64_t b = table.at(k), n = table.at(k + 1);
    if (n <= b + k || !power_fits_in_pow2(n, b)) o.fail("constraints fail at k=" + std::to_string(k));
    if (n - 1 > b + k && power_fits_in_pow2(n - 1, b)) o.fail("predecessor passes at k=" + std::to_string(k));
  }
  if (check_beta_table(table)) o.fail("check_beta_table reports a violation");
  if (o.ok) {
    o.detail = "beta(1..6) =";
    for (auto v : table.values()) o.detail += " " + std::to_string(v);
  }
  return o;
}

Outcome base_case() {
  Outcome o;
  const AlgebraState s = extend({}, 200);
  const StepRecord& st = s.steps.at(0);
  const SparseSeries p1 = entry(1).p;
  const SparseSeries expected = SparseSeries::monomial(3, GaussianRational(ratio(Integer(1), Integer(27)))) +
                                volterra_n(p1, 9);
  if (st.n != 3) o.fail("n_1 = " + std::to_string(st.n));
  if (st.block != expected) o.fail("r_1 != z^3/27 + V^9 p_1");
  if (!(upper_norm(st.block, 1) < ratio(Integer(1), Integer(2)))) o.fail("|r_1|_1 >= 1/2");
  if (derivative_n(st.block, 9) != p1) o.fail("D^9 r_1 != p_1");
  if (o.ok) o.detail = "n_1 = 3, r_1 = " + to_pretty(st.block) + ", |r_1|_1 <= " + format_rational(upper_norm(st.block, 1));
  return o;
}

Outcome desk_construction() {
  Outcome o;
  AlgebraState s;
  try {
    s = construct(3, 200);
  } catch (const SearchCapExceeded& e) {
    o.fail(std::string("search cap: ") + e.what());
    return o;
  } catch (const ResourceCap& e) {
    o.fail(std::string("resource cap: ") + e.what());
    return o;
  }
  const VerificationResult v = verify_state(s);
  if (!v.ok) o.fail("re-verification: " + v.detail);
  int defects = 0;
  for (std::uint64_t k = 1; k <= 3; ++k) {
    const SparseSeries p = SparseSeries::monomial(s.steps[k - 1].d);
    for (std::uint64_t m = 1; m <= k; ++m) {
      const NormBounds nb = algebra_defect(s, p, k, m);
      if (nb.upper > pow2(1 - static_cast<long>(k))) {
        o.fail("defect k=" + std::to_string(k) + " m=" + std::to_string(m) + " = " + decimal_approx(nb.upper, 6));
      }
      ++defects;
    }
  }
  if (o.ok) {
    o.detail = "n =";
    for (const auto& st : s.steps) o.detail += " " + std::to_string(st.n);
    o.detail += ", certificates re-verified, " + std::to_string(defects) + " defects <= 2^{1-k}";
  }
  return o;
}

Outcome subspace_desk_check() {
  Outcome o;
  const SubspaceTruncation t = combination({{1, GaussianRational(1)}}, 6);
  Rational totals[2];
  int idx = 0;
  for (std::uint64_t k : {3, 6}) {
    const OrbitDecomposition dec = decompose_orbit(t, k);
    if (dec.target != entry(k).p) o.fail("target != p_k at k=" + std::to_string(k));
    if (derivative_n(t.series, t.beta.at(k)) != dec.target + dec.q_part + dec.h_part) {
      o.fail("decomposition identity fails at k=" + std::to_string(k));
    }
    totals[idx++] = orbit_defect(t, k, 1).total_upper;
  }
  if (!(totals[1] < totals[0])) o.fail("total_upper(6) >= total_upper(3)");
  if (totals[1] > ratio(Integer(1), Integer(100))) o.fail("total_upper(6) > 1e-2");
  if (o.ok) {
    o.detail = "total_upper(3) <= " + decimal_approx(totals[0], 4) + ", total_upper(6) <= " +
               decimal_approx(totals[1], 4);
  }
  return o;
}

Outcome lemma_decay() {
  Outcome o;
  const SparseSeries one_plus_z = SparseSeries::monomial(0) + SparseSeries::monomial(1);
  const AlphaPair alpha{2, one_plus_z};
  const std::uint64_t a = 2;
  const std::uint64_t k = poly_class_index(alpha.p);
  std::vector<LemmaQuantities> grid;
  for (std::uint64_t n = 2; n <= 10; ++n) {
    grid.push_back(lemma_quantities(alpha, n, a, one_plus_z, 1, 4));
    if (!grid.back().high_derivative) o.fail("missing high-derivative quantity");
    if (upper_norm(q_block(alpha, n), a) > q_block_bound(k, alpha.d, n, a)) {
      o.fail("q-bound fails at n=" + std::to_string(n));
    }
  }
  if (!o.ok) return o;
  const Rational cap = ratio(Integer(1), Integer(100));
  const auto check = [&](const char* name, const Rational& first, const Rational& last) {
    if (last > first) o.fail(std::string(name) + " increased");
    if (last > cap) o.fail(std::string(name) + " at n=10 is " + decimal_approx(last, 4));
  };
  check("block norm", grid.front().block_norm.upper, grid.back().block_norm.upper);
  check("product derivative", grid.front().product_derivative.upper, grid.back().product_derivative.upper);
  check("high derivative", grid.front().high_derivative->upper, grid.back().high_derivative->upper);
  check("target defect", grid.front().target_defect.upper, grid.back().target_defect.upper);
  if (o.ok) {
    o.detail = "n=10: " + decimal_approx(grid.back().block_norm.upper, 3) + ", " +
               decimal_approx(grid.back().product_derivative.upper, 3) + ", " +
               decimal_approx(grid.back().high_derivative->upper, 3) + ", " +
               decimal_approx(grid.back().target_defect.upper, 3) + "; q-bound at 9 points";
  }
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HYPERCYC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome harness() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hypercyc_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto p = [&](const char* name) { return (dir / name).string(); };

  for (std::uint64_t k = 1; k <= 50; ++k) {
    if (entry_from_json(entry_to_json(entry(k))) != entry(k)) o.fail("entry round trip k=" + std::to_string(k));
  }
  const SubspaceTruncation t = combination({{1, GaussianRational(1)}}, 6);
  const DefectReport r = orbit_defect(t, 3, 1);
  const std::string rj = defect_report_to_json(r);
  if (defect_report_to_json(defect_report_from_json(rj)) != rj) o.fail("defect report round trip");

  if (run_cli("battery --seed 5 --cases 50 --out " + p("b1.csv")) != 0) o.fail("clean battery did not exit 0");
  if (run_cli("battery --seed 5 --cases 50 --out " + p("b2.csv")) != 0) o.fail("clean battery did not exit 0");
  if (read_text_file(p("b1.csv")) != read_text_file(p("b2.csv"))) o.fail("battery runs differ");
  if (run_cli("battery --seed 5 --cases 50 --inject-fault") != 1) o.fail("fault injection did not exit 1");
  if (run_cli("subspace --k 10") != 2) o.fail("resource cap did not exit 2");
  if (run_cli("subspace --no-such-flag") != 3) o.fail("usage error did not exit 3");

  if (run_cli("subspace --k 3 6 --out " + p("s1.csv")) != 0) o.fail("subspace run failed");
  if (run_cli("subspace --k 3 6 --out " + p("s2.csv")) != 0) o.fail("subspace run failed");
  const std::string csv = read_text_file(p("s1.csv"));
  if (csv != read_text_file(p("s2.csv"))) o.fail("subspace runs differ");
  if (rows_to_csv(rows_from_csv(csv, "subspace", 2)) != csv) o.fail("CSV round trip");

  if (run_cli("algebra --k 2 --state " + p("st.json") + " --out " + p("a.csv")) != 0) o.fail("algebra run failed");
  const std::string state = read_text_file(p("st.json"));
  if (state_to_json(state_from_json(state)) != state) o.fail("state round trip");
  if (run_cli("algebra --k 2 --state " + p("st2.json") + " --out " + p("a2.csv")) != 0) o.fail("algebra rerun failed");
  if (read_text_file(p("st2.json")) != state || read_text_file(p("a2.csv")) != read_text_file(p("a.csv"))) {
    o.fail("algebra runs differ");
  }
  if (run_cli("plot --in " + p("s1.csv") + " --out " + p("s1.svg")) != 0) o.fail("plot failed");
  if (run_cli("plot --in " + p("s1.csv") + " --out " + p("s2.svg")) != 0) o.fail("plot failed");
  if (read_text_file(p("s1.svg")) != read_text_file(p("s2.svg"))) o.fail("plots differ");

  fs::remove_all(dir);
  if (o.ok) o.detail = "round trips exact, reruns byte-identical, exit codes 0/1/2/3";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "D^n V^n = id on 200 random polynomials, n in {1,3,10}", 5, operator_identities);
  all &= run_criterion(2, "norm inequality suite", 30, norm_suite);
  all &= run_criterion(3, "enumeration gates, pairing and density witnesses", 10, enumeration);
  all &= run_criterion(4, "beta sequence against a brute-force scan", 10, beta_sequence);
  all &= run_criterion(5, "algebra base case", 1, base_case);
  all &= run_criterion(6, "algebra construction K=3, search cap 200", 600, desk_construction);
  all &= run_criterion(7, "subspace orbit defects at k=3,6", 120, subspace_desk_check);
  all &= run_criterion(8, "finite-range decay of the lemma quantities", 60, lemma_decay);
  all &= run_criterion(9, "harness round trips, determinism and exit codes", 10, harness);
  return all ? 0 : 1;
}
