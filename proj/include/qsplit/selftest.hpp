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
 * Oracle-equivalence checks run by `qsplit selftest`: circuit matrices against
 * direct constructions, and the closed-form propagator against dense expm.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsplit/circuits.hpp"
#include "qsplit/dense.hpp"
#include "qsplit/harness.hpp"
#include "qsplit/reference.hpp"
#include "qsplit/schemes.hpp"
#include "qsplit/splitting.hpp"

namespace qsplit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

/// Block-diagonal R_Y^dagger(2 omega_j t) on (data, selector), identity on the ancilla.
inline ComplexMatrix direct_wave_matrix(const ModeSystem& sys, double tau) {
  const Eigen::Index dim = Eigen::Index{1} << sys.n_qubits();
  const Eigen::Index sel = Eigen::Index{1} << sys.layout().selector;
  const std::uint64_t mask = sys.modes_per_dim() - 1;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & sel) continue;
    const double w = sys.omega(static_cast<std::uint64_t>(i) & mask);
    const double angle = w * tau / sys.zeta();  // omega_j t
    m(i, i) = std::cos(angle);
    m(i, i | sel) = std::sin(angle);
    m(i | sel, i) = -std::sin(angle);
    m(i | sel, i | sel) = std::cos(angle);
  }
  return m;
}

}  // namespace detail

inline std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (const auto& s : builtin_schemes()) {
    const auto rep = validate_scheme(s);
    out.push_back({"scheme " + s.name, rep.ok(), std::string(to_string(rep.symmetry))});
  }

  {
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
      ModeSystem sys;
      sys.n = n;
      for (int k = 0; k < 3; ++k) {
        const double tau = 4.0 * (unit(rng) - 0.5);
        worst = std::max(worst, max_abs_diff(circuit_to_matrix(wave_evolution_circuit(sys, tau)),
                                             detail::direct_wave_matrix(sys, tau)));
      }
    }
    out.push_back({"wave circuit vs block rotations", worst < 1e-12, detail::sci(worst)});
  }

  {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
      const Eigen::Index N = Eigen::Index{1} << n;
      ComplexMatrix f(N, N);
      for (Eigen::Index j = 0; j < N; ++j)
        for (Eigen::Index k = 0; k < N; ++k)
          f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(N)),
                               2.0 * std::numbers::pi * static_cast<double>((j * k) % N) /
                                   static_cast<double>(N));
      worst = std::max(worst, max_abs_diff(circuit_to_matrix(qft_circuit(n)), f));
    }
    out.push_back({"qft circuit vs DFT matrix", worst < 1e-12, detail::sci(worst)});
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double w = 20.0 * unit(rng);
      const double g = 10.0 * unit(rng);
      const double t = 2.0 * unit(rng);
      ComplexMatrix gen(2, 2);
      gen << 0.0, w, -w, -g;
      const ComplexMatrix closed = mode_propagator(w, g, t);
      worst = std::max(worst, max_abs_diff(closed, dense_expm(gen, t)));
    }
    out.push_back({"mode propagator vs expm", worst < 1e-12, detail::sci(worst)});
  }

  {
    // Damping + postselection on (selector, ancilla) acts as diag(1, e^{-x}).
    double worst = 0.0;
    RegisterLayout layout;
    layout.selector = 0;
    layout.ancilla = 1;
    for (int k = 0; k < 10; ++k) {
      const double x = 3.0 * unit(rng);
      const ComplexMatrix u = circuit_to_matrix(damping_real_circuit(x, layout));
      // Ancilla is bit 1: rows/cols 0,1 are the ancilla-|0> block.
      const ComplexMatrix block = u.topLeftCorner(2, 2);
      ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
      expect(0, 0) = 1.0;
      expect(1, 1) = std::exp(-x);
      worst = std::max(worst, max_abs_diff(block, expect));
    }
    out.push_back({"damping postselected block", worst < 1e-12, detail::sci(worst)});
  }

  {
    bool ok = true;
    for (const auto& s : builtin_schemes())
      for (int n = 1; n <= 20; ++n)
        for (int d = 1; d <= 3; ++d) {
          const auto g = gate_report(s, n, d);
          ok = ok && g.per_step_cnots == g.formula_cnots;
          if (s.name == "bernier6") ok = ok && g.per_step_cnots == 30L * n * d + 60L * d + 32;
        }
    out.push_back({"cnot counts vs closed form", ok, ok ? "exact" : "mismatch"});
  }

  {
    std::normal_distribution<double> normal;
    ComplexMatrix m(8, 8);
    for (Eigen::Index i = 0; i < 8; ++i)
      for (Eigen::Index j = 0; j < 8; ++j) m(i, j) = complex_t(normal(rng), normal(rng));
    const auto [h1, h2] = hermitian_split(m);
    const ComplexMatrix rebuilt = h1 + complex_t(0.0, 1.0) * h2;
    const double err = max_abs_diff(rebuilt, m);
    out.push_back({"hermitian split reconstruction",
                   err < 1e-14 && is_hermitian(h1, 1e-14) && is_hermitian(h2, 1e-14),
                   detail::sci(err)});
  }

  {
    ModeSystem sys;
    sys.n = 4;
    const auto r = run_point(find_scheme("strang"), sys, 0.7, 3);
    out.push_back({"undamped splitting is exact", r.epsilon < 1e-11, detail::sci(r.epsilon)});
  }
  return out;
}

}  // namespace qsplit
