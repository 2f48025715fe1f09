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

/**
 * @file
 * Convergence sweeps, gate accounting and CSV reports for the damped-wave
 * splitting runs.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <future>
#include <limits>
#include <locale>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qsplit/circuits.hpp"
#include "qsplit/reference.hpp"
#include "qsplit/schemes.hpp"
#include "qsplit/splitting.hpp"

namespace qsplit {

/// Errors below this are at the emulator's round-off floor.
inline constexpr double kMachineFloor = 1e-12;

struct GaussianInit {
  double width = 100.0;
  double center = 0.5;
};

struct RunReport {
  std::string scheme;
  int n = 0;
  int d = 0;
  int steps = 0;
  double dt = 0.0;
  double epsilon = 0.0;
  double success_prob = 1.0;
  long cnots_per_step = 0;
  long cnot_total = 0;
  int qubits = 0;
  double wall_time_s = 0.0;
  double exact_norm_ratio = 1.0;  // ||phi(t)||^2 / ||phi(0)||^2, analytic
};

/// One splitting run from a Gaussian start, compared with the exact solution.
inline RunReport run_point(const SplittingScheme& scheme, const ModeSystem& sys,
                           double t_final, int steps, const GaussianInit& init = {}) {
  if (steps < 1) throw std::invalid_argument("run_point needs steps >= 1");
  const EncodedState enc = encode_gaussian(sys, init.width, init.center);
  const SplitStepPlan plan = build_step(scheme, sys, t_final / steps);
  SimulationResult sim = simulate(plan, steps, enc.state);
  const ExactSolution exact = exact_solution(sys, enc.modes, t_final);

  RunReport r;
  r.scheme = scheme.name;
  r.n = sys.n;
  r.d = sys.d;
  r.steps = steps;
  r.dt = plan.dt;
  r.epsilon = fidelity_error(sim.state, exact.unit);
  r.success_prob = sim.success_prob;
  r.cnots_per_step = sim.cnots_per_step;
  r.cnot_total = sim.cnot_total;
  r.qubits = sys.n_qubits();
  r.wall_time_s = sim.wall_time_s;
  r.exact_norm_ratio = (exact.norm / enc.norm) * (exact.norm / enc.norm);
  return r;
}

/// Inclusive step-count range used for the order fit.
struct FitWindow {
  int min_steps = 1;
  int max_steps = std::numeric_limits<int>::max();
};

struct ConvergenceTable {
  std::vector<RunReport> rows;
  double fitted_order = std::numeric_limits<double>::quiet_NaN();
  std::size_t fit_begin = 0;  // [fit_begin, fit_end) into rows
  std::size_t fit_end = 0;
};

/// Least-squares slope of log(epsilon) against log(dt) over rows[begin, end).
inline double fit_order(std::span<const RunReport> rows, std::size_t begin, std::size_t end) {
  if (end > rows.size() || end < begin + 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    const double x = std::log(rows[i].dt);
    const double y = std::log(rows[i].epsilon);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

/**
 * Picks the contiguous fit range. With an explicit window, the rows whose step
 * count lies inside it. Otherwise: drop the two coarsest rows and every row
 * with epsilon within 10x of the machine floor.
 */
inline std::pair<std::size_t, std::size_t> select_fit_window(
    std::span<const RunReport> rows, const std::optional<FitWindow>& window) {
  std::size_t begin = rows.size(), end = rows.size();
  auto keep = [&](std::size_t i) {
    if (window) return rows[i].steps >= window->min_steps && rows[i].steps <= window->max_steps;
    return i >= 2 && rows[i].epsilon >= 10.0 * kMachineFloor;
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!keep(i)) {
      if (begin != rows.size()) break;
      continue;
    }
    if (begin == rows.size()) begin = i;
    end = i + 1;
  }
  if (begin == rows.size()) return {0, 0};
  return {begin, end};
}

struct SweepPreset {
  std::vector<int> steps;
  FitWindow window;
};

/**
 * Step counts and fit windows that resolve each scheme's asymptotic slope at
 * n = 5, gamma L/c = 0.5, t c/L = 0.5. Lie needs fine steps before its slope
 * settles; bernier6 falls below 1e-12 past T ~ 24.
 */
inline SweepPreset default_sweep(std::string_view scheme) {
  if (scheme == "lie") return {{256, 512, 1024, 2048, 4096}, {1024, 4096}};
  if (scheme == "strang") return {{8, 16, 32, 64, 128, 256}, {16, 256}};
  if (scheme == "castella4") return {{8, 16, 24, 32, 48, 64, 96, 128}, {16, 128}};
  if (scheme == "bernier6") return {{8, 12, 16, 18, 20, 22}, {16, 22}};
  return {{1, 2, 4, 8, 16, 32, 64}, {}};
}

/// One run per step count (in parallel), all against the same exact solution.
inline ConvergenceTable convergence_sweep(const SplittingScheme& scheme, const ModeSystem& sys,
                                          double t_final, const std::vector<int>& step_list,
                                          const std::optional<FitWindow>& window = std::nullopt,
                                          const GaussianInit& init = {}) {
  if (step_list.size() < 3) throw std::invalid_argument("sweep needs at least three step counts");
  if (!std::is_sorted(step_list.begin(), step_list.end()) ||
      std::adjacent_find(step_list.begin(), step_list.end()) != step_list.end())
    throw std::invalid_argument("sweep step counts must be strictly ascending");

  std::vector<std::future<RunReport>> jobs;
  jobs.reserve(step_list.size());
  for (int steps : step_list)
    jobs.push_back(std::async(std::launch::async, [&, steps] {
      return run_point(scheme, sys, t_final, steps, init);
    }));

  ConvergenceTable table;
  for (auto& j : jobs) table.rows.push_back(j.get());
  std::tie(table.fit_begin, table.fit_end) = select_fit_window(table.rows, window);
  table.fitted_order = fit_order(table.rows, table.fit_begin, table.fit_end);
  return table;
}

struct GateReport {
  long per_step_cnots = 0;  // counted from the built circuits
  long formula_cnots = 0;   // closed form from stage counts
  int qubits = 0;
};

/// Closed form: 2 CNOTs per real damping stage plus (2n + 4) per wave stage.
inline long formula_cnots(const SplittingScheme& scheme, int n, int d) {
  return 2L * static_cast<long>(scheme.a.size()) +
         static_cast<long>(scheme.b.size()) * d * (2L * n + 4);
}

inline GateReport gate_report(const SplittingScheme& scheme, int n, int d) {
  ModeSystem sys;
  sys.n = n;
  sys.d = d;
  sys.gamma = 1.0;
  GateReport g;
  g.per_step_cnots = cnot_count(build_step(scheme, sys, 1.0));
  g.formula_cnots = formula_cnots(scheme, n, d);
  g.qubits = n * d + 2;
  return g;
}

inline void write_csv(std::ostream& os, std::span<const RunReport> rows,
                      bool include_timing = true) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf.precision(17);
  buf << "scheme,n,d,T,dt,epsilon,success_prob,cnots,qubits,wall_time_s\n";
  for (const auto& r : rows)
    buf << r.scheme << ',' << r.n << ',' << r.d << ',' << r.steps << ',' << r.dt << ','
        << r.epsilon << ',' << r.success_prob << ',' << r.cnot_total << ',' << r.qubits << ','
        << (include_timing ? r.wall_time_s : 0.0) << '\n';
  os << buf.str();
}

inline void emit_csv(const std::string& path, std::span<const RunReport> rows,
                     bool include_timing = true) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(out, rows, include_timing);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

inline void emit_csv(const std::string& path, const ConvergenceTable& table,
                     bool include_timing = true) {
  emit_csv(path, std::span<const RunReport>(table.rows), include_timing);
}

}  // namespace qsplit
