// Copyright 2026 The qsplit Authors
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

// Command-line front end: simulate, sweep, gates, validate-schemes, selftest.
//
// Physical inputs are dimensionless ratios (gamma L / c, t c / L); internally
// c = L = 1. Exit codes: 0 success, 1 verification or runtime failure,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsplit/qsplit.hpp"
#include "qsplit/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string scheme = "bernier6";
  int n = 7;
  int d = 1;
  int steps = 4;
  double gamma_ratio = 0.5;
  double time_ratio = 0.5;
  double width = 100.0;
  double center = 0.5;
  std::string output;
  std::uint64_t seed = 12345;
  bool no_timing = false;
  std::vector<int> steps_list;  // empty: per-scheme preset
  int fit_min = 0;
  int fit_max = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

qsplit::ModeSystem make_system(const CliConfig& cfg) {
  qsplit::ModeSystem sys;
  sys.n = cfg.n;
  sys.d = cfg.d;
  sys.gamma = cfg.gamma_ratio;
  return sys;
}

void require_simulable(const CliConfig& cfg) {
  if (cfg.n * cfg.d + 2 > 26)
    throw UsageError("statevector of n*d+2 = " + std::to_string(cfg.n * cfg.d + 2) +
                     " qubits is too large to emulate (limit 26)");
  if (cfg.gamma_ratio < 0.0) throw UsageError("--gamma-ratio must be non-negative");
  if (!(cfg.time_ratio > 0.0)) throw UsageError("--time-ratio must be positive");
}

void print_report(std::ostream& os, const qsplit::RunReport& r, bool timing) {
  std::ostringstream buf;
  buf.precision(10);
  buf << "scheme        " << r.scheme << '\n'
      << "n, d          " << r.n << ", " << r.d << '\n'
      << "qubits        " << r.qubits << '\n'
      << "steps         " << r.steps << '\n'
      << "dt            " << r.dt << '\n'
      << "epsilon       " << r.epsilon << '\n'
      << "success_prob  " << r.success_prob << '\n'
      << "exact_ratio   " << r.exact_norm_ratio << '\n'
      << "cnots/step    " << r.cnots_per_step << '\n'
      << "cnots total   " << r.cnot_total << '\n';
  if (timing) buf << "wall_time_s   " << r.wall_time_s << '\n';
  os << buf.str();
}

int cmd_simulate(const CliConfig& cfg) {
  require_simulable(cfg);
  const auto& scheme = qsplit::find_scheme(cfg.scheme);
  const auto report = qsplit::run_point(scheme, make_system(cfg), cfg.time_ratio, cfg.steps,
                                        {cfg.width, cfg.center});
  print_report(std::cout, report, !cfg.no_timing);
  if (!cfg.output.empty())
    qsplit::emit_csv(cfg.output, std::span<const qsplit::RunReport>(&report, 1), !cfg.no_timing);
  return kExitOk;
}

int cmd_sweep(const CliConfig& cfg) {
  require_simulable(cfg);
  const auto& scheme = qsplit::find_scheme(cfg.scheme);
  std::vector<int> steps = cfg.steps_list;
  std::optional<qsplit::FitWindow> window;
  if (steps.empty()) {
    const auto preset = qsplit::default_sweep(scheme.name);
    steps = preset.steps;
    if (cfg.fit_min <= 0 && cfg.fit_max <= 0) window = preset.window;
  }
  if (cfg.fit_min > 0 || cfg.fit_max > 0) {
    window = qsplit::FitWindow{};
    if (cfg.fit_min > 0) window->min_steps = cfg.fit_min;
    if (cfg.fit_max > 0) window->max_steps = cfg.fit_max;
  }
  qsplit::ConvergenceTable table;
  try {
    table = qsplit::convergence_sweep(scheme, make_system(cfg), cfg.time_ratio, steps,
                                      window, {cfg.width, cfg.center});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.output.empty())
    qsplit::write_csv(std::cout, table.rows, !cfg.no_timing);
  else
    qsplit::emit_csv(cfg.output, table, !cfg.no_timing);
  std::cerr << "fitted order " << table.fitted_order << " over rows [" << table.fit_begin << ", "
            << table.fit_end << ")\n";
  return kExitOk;
}

int cmd_gates(const CliConfig& cfg) {
  const auto& scheme = qsplit::find_scheme(cfg.scheme);
  const auto g = qsplit::gate_report(scheme, cfg.n, cfg.d);
  std::cout << "scheme " << scheme.name << " n " << cfg.n << " d " << cfg.d << '\n'
            << "per_step_cnots " << g.per_step_cnots << '\n'
            << "formula_cnots " << g.formula_cnots << '\n'
            << "qubits " << g.qubits << '\n';
  return g.per_step_cnots == g.formula_cnots ? kExitOk : kExitFailure;
}

int cmd_validate() {
  bool all_ok = true;
  for (const auto& s : qsplit::builtin_schemes()) {
    const auto r = qsplit::validate_scheme(s);
    std::ostringstream os;
    os.precision(17);
    os << (r.ok() ? "PASS " : "FAIL ") << s.name << " order=" << s.order
       << " sum_a=" << r.sum_a.real() << (r.sum_a.imag() < 0 ? "" : "+") << r.sum_a.imag() << "i"
       << " sum_b=" << r.sum_b << " min_re_a=" << r.min_re_a << " min_b=" << r.min_b
       << " symmetry=" << qsplit::to_string(r.symmetry);
    for (const auto& v : r.violations) os << " [" << v << "]";
    std::cout << os.str() << '\n';
    all_ok = all_ok && r.ok();
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_selftest(const CliConfig& cfg) {
  bool all_ok = true;
  for (const auto& c : qsplit::run_selftest(cfg.seed)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    all_ok = all_ok && c.passed;
  }
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order complex-coefficient splitting for the damped-wave equation"};
  app.require_subcommand(1, 1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scheme", cfg.scheme, "lie | strang | castella4 | bernier6")
        ->check(CLI::IsMember({"lie", "strang", "castella4", "bernier6"}));
    sub->add_option("--n", cfg.n, "qubits per spatial dimension")->check(CLI::Range(1, 20));
    sub->add_option("--d", cfg.d, "spatial dimensions")->check(CLI::Range(1, 3));
  };
  auto add_physics = [&](CLI::App* sub) {
    sub->add_option("--gamma-ratio", cfg.gamma_ratio, "damping ratio gamma L / c");
    sub->add_option("--time-ratio", cfg.time_ratio, "final time t c / L");
    sub->add_option("--width", cfg.width, "Gaussian width coefficient");
    sub->add_option("--center", cfg.center, "Gaussian center as a fraction of L");
    sub->add_option("--output", cfg.output, "CSV output path");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_flag("--no-timing", cfg.no_timing, "write wall_time_s as 0 for reproducible output");
  };

  auto* simulate = app.add_subcommand("simulate", "run one splitting trajectory");
  add_common(simulate);
  add_physics(simulate);
  simulate->add_option("--steps", cfg.steps, "splitting steps T")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "convergence sweep over step counts");
  add_common(sweep);
  add_physics(sweep);
  sweep->add_option("--steps-list", cfg.steps_list, "ascending step counts (default: per-scheme preset)")->delimiter(',');
  sweep->add_option("--fit-min", cfg.fit_min, "smallest step count in the fit window");
  sweep->add_option("--fit-max", cfg.fit_max, "largest step count in the fit window");

  auto* gates = app.add_subcommand("gates", "CNOT and qubit counts for one step");
  add_common(gates);

  auto* validate = app.add_subcommand("validate-schemes", "check the built-in coefficient sets");
  auto* selftest = app.add_subcommand("selftest", "oracle-equivalence checks");
  selftest->add_option("--seed", cfg.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*gates) return cmd_gates(cfg);
    if (*validate) return cmd_validate();
    if (*selftest) return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
