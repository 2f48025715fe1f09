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
 * Splitting steps for the damped-wave circuits and for generic generators.
 *
 * Stage order per step: for each i < len(b), the dissipative stage a_i
 * (real-time damping, imaginary-time phase, postselection) followed
 * by the wave stage b_i in every dimension; a trailing a-stage closes the step
 * when len(a) = len(b) + 1.
 */

#pragma once

#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qsplit/circuits.hpp"
#include "qsplit/dense.hpp"
#include "qsplit/reference.hpp"
#include "qsplit/schemes.hpp"
#include "qsplit/statevector.hpp"

namespace qsplit {

/// Durations are physical times (coefficient times dt).
struct WaveStage {
  int dim = 0;
  double duration = 0.0;
};
struct DampRealStage {
  double duration = 0.0;
};
struct DampPhaseStage {
  double duration = 0.0;
};
struct PostselectStage {};

using StageOp = std::variant<WaveStage, DampRealStage, DampPhaseStage, PostselectStage>;

struct SplitStepPlan {
  SplittingScheme scheme;
  ModeSystem sys;
  double dt = 0.0;
  std::vector<StageOp> stages;
};

/// Imaginary parts below this are treated as zero and emit no phase stage.
inline constexpr double kPhaseStageCutoff = 1e-15;

inline SplitStepPlan build_step(const SplittingScheme& scheme, const ModeSystem& sys,
                                double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("build_step needs dt > 0");
  if (scheme.a.empty() || scheme.b.empty())
    throw std::invalid_argument("build_step: empty scheme");
  SplitStepPlan plan{scheme, sys, dt, {}};
  auto dissipative = [&](const complex_t& a) {
    plan.stages.emplace_back(DampRealStage{a.real() * dt});
    if (std::abs(a.imag()) >= kPhaseStageCutoff)
      plan.stages.emplace_back(DampPhaseStage{a.imag() * dt});
    plan.stages.emplace_back(PostselectStage{});
  };
  for (std::size_t i = 0; i < scheme.b.size(); ++i) {
    dissipative(scheme.a[i]);
    for (int k = 0; k < sys.d; ++k)
      plan.stages.emplace_back(WaveStage{k, scheme.b[i] * dt});
  }
  if (scheme.a.size() > scheme.b.size()) dissipative(scheme.a.back());
  return plan;
}

/// Gate circuit for a stage; postselection stages yield nothing.
inline std::optional<Circuit> stage_circuit(const ModeSystem& sys, const StageOp& stage) {
  const RegisterLayout layout = sys.layout();
  return std::visit(
      [&](const auto& s) -> std::optional<Circuit> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, WaveStage>)
          return wave_evolution_circuit(sys, sys.zeta() * s.duration, s.dim);
        else if constexpr (std::is_same_v<S, DampRealStage>)
          return damping_real_circuit(sys.gamma * s.duration, layout);
        else if constexpr (std::is_same_v<S, DampPhaseStage>)
          return damping_phase_gate(sys.gamma * s.duration, layout);
        else
          return std::nullopt;
      },
      stage);
}

struct StageCounts {
  int wave = 0;
  int damp_real = 0;
  int damp_phase = 0;
  int postselect = 0;
};

inline StageCounts count_stages(const SplitStepPlan& plan) {
  StageCounts c;
  for (const auto& s : plan.stages) {
    if (std::holds_alternative<WaveStage>(s)) ++c.wave;
    else if (std::holds_alternative<DampRealStage>(s)) ++c.damp_real;
    else if (std::holds_alternative<DampPhaseStage>(s)) ++c.damp_phase;
    else ++c.postselect;
  }
  return c;
}

inline long cnot_count(const SplitStepPlan& plan) {
  long total = 0;
  for (const auto& s : plan.stages)
    if (auto c = stage_circuit(plan.sys, s)) total += cnot_count(*c);
  return total;
}

struct SimulationResult {
  StateVector state;  // final, unit norm
  double success_prob = 1.0;  // product of all postselection probabilities
  long cnots_per_step = 0;
  long cnot_total = 0;
  double wall_time_s = 0.0;
};

/// Runs `steps` splitting steps, postselecting the ancilla on |0> after every
/// real damping stage.
inline SimulationResult simulate(const SplitStepPlan& plan, int steps, StateVector initial) {
  if (steps < 1) throw std::invalid_argument("simulate needs at least one step");
  if (initial.n_qubits() != plan.sys.n_qubits())
    throw std::invalid_argument("initial state does not match the register layout");
  const int ancilla = plan.sys.layout().ancilla;

  std::vector<std::optional<Circuit>> compiled;
  compiled.reserve(plan.stages.size());
  long per_step = 0;
  for (const auto& s : plan.stages) {
    compiled.push_back(stage_circuit(plan.sys, s));
    if (compiled.back()) per_step += cnot_count(*compiled.back());
  }

  const auto start = std::chrono::steady_clock::now();
  StateVector state = std::move(initial);
  for (int step = 0; step < steps; ++step) {
    for (const auto& c : compiled) {
      if (c)
        apply(*c, state);
      else
        state.postselect(ancilla, 0);
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  SimulationResult r{std::move(state), 1.0, per_step, per_step * steps, elapsed.count()};
  r.success_prob = r.state.magnitude() * r.state.magnitude();
  return r;
}

/**
 * Product over T steps of e^{H1 a_i dt} e^{i H2 b_i dt}, applied in stage order
 * (a_0 acts first). Classical oracle for the splitting error on arbitrary
 * generators M = H1 + i H2.
 */
inline ComplexMatrix generic_split_matrix(const SplittingScheme& scheme, const ComplexMatrix& h1,
                                          const ComplexMatrix& h2, double t, int steps) {
  if (h1.rows() != h2.rows() || h1.cols() != h2.cols())
    throw std::invalid_argument("generic_split_matrix: shape mismatch");
  if (!is_hermitian(h1) || !is_hermitian(h2))
    throw std::invalid_argument("generic_split_matrix: generators must be Hermitian");
  if (h1.rows() > 64) throw std::invalid_argument("generic_split_matrix: dimension > 64");
  if (steps < 1) throw std::invalid_argument("generic_split_matrix: steps must be >= 1");
  const double dt = t / steps;
  const complex_t i_unit{0.0, 1.0};
  const Eigen::Index dim = h1.rows();

  ComplexMatrix step = ComplexMatrix::Identity(dim, dim);
  for (std::size_t k = 0; k < scheme.a.size(); ++k) {
    step = dense_expm(h1 * scheme.a[k], dt) * step;
    if (k < scheme.b.size()) step = dense_expm(h2 * (i_unit * scheme.b[k]), dt) * step;
  }
  ComplexMatrix total = ComplexMatrix::Identity(dim, dim);
  for (int s = 0; s < steps; ++s) total = step * total;
  return total;
}

}  // namespace qsplit
