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


// hypercyc: batteries, constructions and plots from the command line.
//
// Exit status: 0 success, 1 an asserted inequality failed, 2 a resource or
// search cap was hit, 3 usage error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypercyc/battery.hpp"
#include "hypercyc/experiments.hpp"
#include "hypercyc/report.hpp"
#include "hypercyc/serialize.hpp"
#include "hypercyc/svg.hpp"

namespace fs = std::filesystem;
using namespace hypercyc;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kCap = 2, kUsage = 3 };

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed, cases, cutoff, search_cap, cap_bits, max_exponent;
  std::vector<std::uint64_t> k, norm_base;
  std::vector<std::string> coeff;
  std::optional<std::string> out, state, in;
  bool inject_fault = false;
  bool resume = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--resource-cap-bits", o.cap_bits, "largest integer size, in bits");
  cmd->add_option("--max-exponent", o.max_exponent, "largest materialised exponent");
}

ExperimentConfig load(const Overrides& o) {
  ExperimentConfig c = o.config.empty() ? ExperimentConfig{} : parse_experiment_config(read_text_file(o.config));
  if (o.seed) c.seed = *o.seed;
  if (o.cases) c.cases = *o.cases;
  if (o.cutoff) c.cutoff = *o.cutoff;
  if (o.search_cap) c.search_cap = *o.search_cap;
  if (o.cap_bits) c.limits.cap_bits = *o.cap_bits;
  if (o.max_exponent) c.limits.max_exponent = *o.max_exponent;
  if (!o.norm_base.empty()) c.norm_bases = o.norm_base;
  if (o.inject_fault) c.inject_fault = true;
  if (!o.coeff.empty()) {
    c.coeffs.clear();
    for (const auto& spec : o.coeff) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) throw BadArgument("--coeff expects d=value, got '" + spec + "'");
      c.coeffs[std::stoull(spec.substr(0, eq))] = parse_gaussian(spec.substr(eq + 1));
    }
  }
  if (o.out) c.out = *o.out;
  if (o.state) c.state = *o.state;
  if (o.in) c.in = *o.in;
  if (!c.out.empty()) check_writable(c.out);
  if (!c.state.empty()) check_writable(c.state);
  return c;
}

void emit(const ExperimentConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(c.out, text);
  }
}

int cmd_battery(const Overrides& o) {
  const ExperimentConfig c = load(o);
  BatteryConfig bc;
  bc.seed = c.seed;
  bc.cases = c.cases;
  bc.inject_fault = c.inject_fault;
  bc.limits = c.limits;
  const BatteryResult r = run_battery(bc);
  emit(c, rows_to_csv(r.rows));
  for (const auto& bad : r.violating_inputs) std::cerr << "violation: " << bad << "\n";
  std::cerr << "battery: " << r.rows.size() << " checks, " << r.violations << " violations\n";
  return r.ok() ? kOk : kAssertion;
}

int cmd_subspace(const Overrides& o) {
  ExperimentConfig c = load(o);
  if (!o.k.empty()) c.k_list = o.k;
  const SubspaceResult r = run_subspace_experiment(c);
  emit(c, rows_to_csv(r.rows));
  return kOk;
}

int cmd_algebra(const Overrides& o) {
  ExperimentConfig c = load(o);
  if (!o.k.empty()) {
    if (o.k.size() != 1) throw BadArgument("algebra: --k takes a single step count");
    c.K = o.k.front();
  }
  AlgebraState start;
  if (o.resume && !c.state.empty() && fs::exists(c.state)) {
    start = state_from_json(read_text_file(c.state));
    std::cerr << "resuming from " << start.size() << " verified steps\n";
  }
  StepCallback persist;
  if (!c.state.empty()) {
    persist = [&c](const AlgebraState& s) {
      write_text_file(c.state, state_to_json(s));
      std::cerr << "step " << s.size() << ": n = " << s.steps.back().n << "\n";
    };
  }
  try {
    const AlgebraResult r = run_algebra_experiment(c, start, persist);
    emit(c, rows_to_csv(r.rows));
    return r.all_pass ? kOk : kAssertion;
  } catch (const SearchCapExceeded& e) {
    const std::string report = condition_report_to_json(e.last_report());
    std::cerr << "last condition report:\n" << report << "\n";
    if (!c.state.empty()) write_text_file(c.state + ".last_report.json", report + "\n");
    throw;
  }
}

int cmd_plot(const Overrides& o) {
  const ExperimentConfig c = load(o);
  if (c.in.empty()) throw BadArgument("plot: --in is required");
  const std::string text = read_text_file(c.in);
  const auto records = parse_csv(text);
  if (records.empty()) throw EmptyInput("plot: " + c.in + " is empty");
  const auto& header = records.front();
  const bool algebra = std::find(header.begin(), header.end(), "poly") != header.end();
  const auto rows = rows_from_csv(text, algebra ? "algebra" : "subspace", algebra ? 3 : 2);
  emit(c, render_convergence_svg(rows));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions of hypercyclic vectors for the differentiation operator"};
  app.require_subcommand(1);
  Overrides o;

  auto* battery = app.add_subcommand("battery", "run the seeded invariant batteries");
  add_common(battery, o);
  battery->add_option("--seed", o.seed, "random seed");
  battery->add_option("--cases", o.cases, "cases per check");
  battery->add_flag("--inject-fault", o.inject_fault, "negate one comparison (harness self-test)");

  auto* subspace = app.add_subcommand("subspace", "orbit defects of a finite combination of basis functions");
  add_common(subspace, o);
  subspace->add_option("--k", o.k, "indices k to evaluate");
  subspace->add_option("--norm-base", o.norm_base, "norm bases a");
  subspace->add_option("--coeff", o.coeff, "coefficient d=re or d='re im'");
  subspace->add_option("--cutoff", o.cutoff, "largest Volterra index kept");

  auto* algebra = app.add_subcommand("algebra", "inductive construction and p o f defects");
  add_common(algebra, o);
  algebra->add_option("--k", o.k, "number of steps K");
  algebra->add_option("--search-cap", o.search_cap, "candidates tried per step");
  algebra->add_option("--state", o.state, "state file, rewritten after every step");
  algebra->add_flag("--resume", o.resume, "continue from the state file if it exists");

  auto* plot = app.add_subcommand("plot", "render a report CSV as an SVG chart");
  add_common(plot, o);
  plot->add_option("--in", o.in, "report CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (battery->parsed()) return cmd_battery(o);
    if (subspace->parsed()) return cmd_subspace(o);
    if (algebra->parsed()) return cmd_algebra(o);
    return cmd_plot(o);
  } catch (const SearchCapExceeded& e) {
    std::cerr << "search cap: " << e.what() << "\n";
    return kCap;
  } catch (const ResourceCap& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const BadArgument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const EmptyInput& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAssertion;
  }
}
