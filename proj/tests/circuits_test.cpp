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

#include "qsplit/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace qsplit;
namespace qt = qsplit::testing;

namespace {

qt::Mat dft_matrix(int n) {
  const Eigen::Index N = Eigen::Index{1} << n;
  qt::Mat f(N, N);
  for (Eigen::Index j = 0; j < N; ++j)
    for (Eigen::Index k = 0; k < N; ++k)
      f(j, k) = std::exp(complex_t(0.0, 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                            static_cast<double>(N))) /
                std::sqrt(static_cast<double>(N));
  return f;
}

// Piecewise mode frequency for c = L = 1, written out from its definition.
double omega_direct(int n, int j) {
  const int N = 1 << n;
  return 2.0 * std::numbers::pi * (j < N / 2 ? j : N - j);
}

// Direct sum over data index j of R_Y^dagger(2 omega_j t) on the selector,
// assembled from 2x2 blocks; ancilla identity.
qt::Mat wave_direct(int n, double tau) {
  const double zeta = 4.0 * std::numbers::pi;
  const int N = 1 << n;
  qt::Mat m = qt::Mat::Zero(4 * N, 4 * N);
  for (int anc = 0; anc < 2; ++anc)
    for (int j = 0; j < N; ++j) {
      const double th = omega_direct(n, j) * tau / zeta;
      const int i0 = anc * 2 * N + j;
      const int i1 = i0 + N;
      m(i0, i0) = std::cos(th);
      m(i0, i1) = std::sin(th);
      m(i1, i0) = -std::sin(th);
      m(i1, i1) = std::cos(th);
    }
  return m;
}

ModeSystem system_1d(int n, double gamma = 0.0) {
  ModeSystem s;
  s.n = n;
  s.gamma = gamma;
  return s;
}

bool is_unitary(const qt::Mat& u, double tol) {
  return (u.adjoint() * u - qt::Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

TEST(circuits, qft_one_qubit_is_hadamard) {
  const qt::Mat u = circuit_to_matrix(qft_circuit(1));
  qt::Mat h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  EXPECT_LT((u - h).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(circuits, qft_of_zero_is_uniform) {
  for (int n = 1; n <= 6; ++n) {
    StateVector s(n);
    apply(qft_circuit(n), s);
    for (std::size_t i = 0; i < s.size(); ++i)
      EXPECT_NEAR(std::abs(s[i] - std::pow(2.0, -n / 2.0)), 0.0, 1e-13);
  }
}

TEST(circuits, qft_matches_dft_matrix) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_LT((circuit_to_matrix(qft_circuit(n)) - dft_matrix(n)).cwiseAbs().maxCoeff(), 1e-12)
        << "n = " << n;
}

TEST(circuits, qft_cnot_count) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(cnot_count(qft_circuit(n)), n * (n - 1) + 3 * (n / 2));
}

TEST(circuits, mode_frequencies) {
  const auto sys = system_1d(3);
  EXPECT_DOUBLE_EQ(sys.omega(5), 2.0 * std::numbers::pi * 3.0);
  EXPECT_DOUBLE_EQ(sys.omega(4), 2.0 * std::numbers::pi * 4.0);  // Nyquist, both branches
  EXPECT_EQ(sys.omega(0), 0.0);
  EXPECT_DOUBLE_EQ(sys.zeta(), 4.0 * std::numbers::pi);
}

TEST(circuits, wave_zero_time_is_identity) {
  const auto u = circuit_to_matrix(wave_evolution_circuit(system_1d(3), 0.0));
  EXPECT_LT((u - qt::Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(circuits, wave_matches_block_rotations) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> tau(-3.0, 3.0);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < 4; ++k) {
      const double t = tau(rng);
      const auto u = circuit_to_matrix(wave_evolution_circuit(system_1d(n), t));
      EXPECT_LT((u - wave_direct(n, t)).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n;
      EXPECT_TRUE(is_unitary(u, 1e-12));
    }
}

TEST(circuits, wave_upper_branch_angle) {
  // n = 3, j = 5: omega = 2 pi * 3, so the selector rotates by omega t.
  const auto sys = system_1d(3);
  const double t = 0.01;
  const auto u = circuit_to_matrix(wave_evolution_circuit(sys, sys.zeta() * t));
  const int j = 5, N = 8;
  EXPECT_NEAR(u(j, j).real(), std::cos(6.0 * std::numbers::pi * t), 1e-14);
  EXPECT_NEAR(u(j, j + N).real(), std::sin(6.0 * std::numbers::pi * t), 1e-14);
}

TEST(circuits, wave_is_exact_in_time) {
  const auto sys = system_1d(4);
  const double tau = 2.7;
  for (int k : {2, 3, 7}) {
    std::mt19937_64 rng(k);
    StateVector a(sys.n_qubits(), qt::random_state(rng, std::size_t{1} << sys.n_qubits()));
    StateVector b = a;
    for (int i = 0; i < k; ++i) apply(wave_evolution_circuit(sys, tau / k), a);
    apply(wave_evolution_circuit(sys, tau), b);
    EXPECT_LT(fidelity_error(a, b.amplitudes()), 1e-11);
  }
}

TEST(circuits, wave_cnot_count) {
  for (int n = 1; n <= 20; ++n)
    EXPECT_EQ(cnot_count(wave_evolution_circuit(system_1d(n), 0.3)), 2 * n + 4);
  EXPECT_EQ(cnot_count(wave_evolution_circuit(system_1d(7), 0.3)), 18);
}

TEST(circuits, wave_in_second_dimension) {
  ModeSystem sys = system_1d(2);
  sys.d = 2;
  const auto c = wave_evolution_circuit(sys, 0.4, 1);
  for (const auto& op : c.ops()) {
    EXPECT_EQ(op.target, 4);
    EXPECT_TRUE(op.control == 2 || op.control == 3);
  }
  EXPECT_THROW(wave_evolution_circuit(sys, 0.4, 2), std::out_of_range);
}

TEST(circuits, damping_real_zero_is_identity) {
  const auto layout = RegisterLayout::standard(2, 1);
  const auto c = damping_real_circuit(0.0, layout);
  const auto u = circuit_to_matrix(c);
  EXPECT_LT((u - qt::Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-15);
  StateVector s = StateVector::basis(4, 0b0100);  // selector |1>
  apply(c, s);
  EXPECT_NEAR(s.postselect(layout.ancilla, 0), 1.0, 1e-15);
}

TEST(circuits, damping_real_probability) {
  const auto layout = RegisterLayout::standard(2, 1);
  for (double x : {0.1, 0.3}) {
    StateVector s = StateVector::basis(4, 0b0101);  // mode j = 1, selector |1>
    apply(damping_real_circuit(x, layout), s);
    EXPECT_NEAR(s.postselect(layout.ancilla, 0), std::exp(-2.0 * x), 1e-15);
  }
  EXPECT_EQ(cnot_count(damping_real_circuit(0.3, layout)), 2);
  EXPECT_THROW(damping_real_circuit(-0.1, layout), std::invalid_argument);
}

TEST(circuits, damping_real_is_selector_diagonal_map) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> arg(0.0, 2.0);
  for (int n = 1; n <= 5; ++n) {
    const auto layout = RegisterLayout::standard(n, 1);
    const std::size_t half = std::size_t{1} << (n + 1);
    for (int k = 0; k < 3; ++k) {
      const double x = arg(rng);
      auto amps = qt::random_state(rng, 2 * half);
      for (std::size_t i = half; i < 2 * half; ++i) amps[i] = 0.0;  // ancilla |0>
      StateVector s(n + 2, amps);
      apply(damping_real_circuit(x, layout), s);
      s.postselect(layout.ancilla, 0);

      const std::size_t sel = std::size_t{1} << n;
      std::vector<complex_t> expect(2 * half);
      double nrm = 0.0;
      for (std::size_t i = 0; i < half; ++i) {
        expect[i] = (i & sel) ? amps[i] * std::exp(-x) : amps[i];
        nrm += std::norm(expect[i]);
      }
      for (auto& v : expect) v /= std::sqrt(nrm);
      EXPECT_LT(fidelity_error(s, expect), 1e-12);
    }
  }
}

TEST(circuits, damping_phase_gate) {
  const auto layout = RegisterLayout::standard(1, 1);
  const auto id = circuit_to_matrix(damping_phase_gate(0.0, layout));
  EXPECT_LT((id - qt::Mat::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);

  StateVector s = StateVector::basis(3, 0b010);  // selector |1>
  const auto c = damping_phase_gate(0.2, layout);
  apply(c, s);
  EXPECT_NEAR(std::abs(s[2] - std::polar(1.0, -0.2)), 0.0, 1e-15);
  EXPECT_EQ(cnot_count(c), 0);
  EXPECT_FALSE(c.rz_substituted());

  const auto rz = damping_phase_gate(0.2, layout, true);
  EXPECT_TRUE(rz.rz_substituted());
  const qt::Mat up = circuit_to_matrix(c);
  const qt::Mat ur = circuit_to_matrix(rz);
  // Equal up to the global phase e^{-i theta/2} with theta = -0.2.
  EXPECT_LT((ur - std::polar(1.0, 0.1) * up).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(circuits, matrix_of_empty_and_cnot) {
  const auto id = circuit_to_matrix(Circuit(3));
  EXPECT_EQ(id, qt::Mat::Identity(8, 8));
  Circuit c(2);
  c.cnot(1, 0);
  qt::Mat expect = qt::Mat::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = expect(2, 3) = expect(3, 2) = 1.0;
  EXPECT_EQ(circuit_to_matrix(c), expect);
  EXPECT_THROW(circuit_to_matrix(Circuit(13)), std::invalid_argument);
}

TEST(circuits, matrix_matches_kron_construction) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  const int n = 4;
  Circuit c(n);
  qt::Mat expect = qt::Mat::Identity(16, 16);
  for (int k = 0; k < 25; ++k) {
    const int t = static_cast<int>(rng() % n);
    const int ctl = (t + 1 + static_cast<int>(rng() % (n - 1))) % n;
    const double th = angle(rng);
    switch (k % 4) {
      case 0:
        c.ry(th, t);
        expect = qt::single_qubit(n, qt::to_mat(Gate2x2::ry(th).m), t) * expect;
        break;
      case 1:
        c.cp(th, ctl, t);
        expect = qt::controlled(n, qt::to_mat(Gate2x2::phase(th).m), ctl, t) * expect;
        break;
      case 2:
        c.cry(th, ctl, t);
        expect = qt::controlled(n, qt::to_mat(Gate2x2::ry(th).m), ctl, t) * expect;
        break;
      default:
        c.cnot(ctl, t);
        expect = qt::controlled(n, qt::to_mat(Gate2x2::x().m), ctl, t) * expect;
        break;
    }
  }
  const qt::Mat u = circuit_to_matrix(c);
  EXPECT_LT((u - expect).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_TRUE(is_unitary(u, 1e-12));
}

TEST(circuits, gate_costs) {
  EXPECT_EQ(cnot_cost(GateKind::RY), 0);
  EXPECT_EQ(cnot_cost(GateKind::RZ), 0);
  EXPECT_EQ(cnot_cost(GateKind::P), 0);
  EXPECT_EQ(cnot_cost(GateKind::X), 0);
  EXPECT_EQ(cnot_cost(GateKind::CNOT), 1);
  EXPECT_EQ(cnot_cost(GateKind::CRY), 2);
  EXPECT_EQ(cnot_cost(GateKind::CP), 2);
}

TEST(circuits, invalid_ops_rejected) {
  Circuit c(2);
  EXPECT_THROW(c.x(2), std::out_of_range);
  EXPECT_THROW(c.cnot(0, 0), std::invalid_argument);
  EXPECT_THROW(c.cry(0.1, -1, 0), std::out_of_range);
}

TEST(circuits, layout_is_disjoint) {
  const auto l = RegisterLayout::standard(3, 3);
  std::vector<int> seen;
  for (const auto& reg : l.data) seen.insert(seen.end(), reg.begin(), reg.end());
  seen.push_back(l.selector);
  seen.push_back(l.ancilla);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  EXPECT_EQ(static_cast<int>(seen.size()), 3 * 3 + 2);
  EXPECT_EQ(l.n_qubits(), 11);
}

TEST(circuits, text_dump_golden) {
  const auto wave = wave_evolution_circuit(system_1d(2), 0.25);
  EXPECT_EQ(to_text(wave),
            "CNOT 0 1 2\n"
            "CRY -0.25 0 2\n"
            "CRY -0.5 1 2\n"
            "CNOT 0 1 2\n"
            "CRY -1 1 2\n");
  const auto layout = RegisterLayout::standard(1, 1);
  EXPECT_EQ(to_text(damping_real_circuit(0.3, layout)), "CRY 1.4730173225681666 1 2\n");
  EXPECT_EQ(to_text(damping_phase_gate(0.2, layout)), "P -0.20000000000000001 -1 1\n");
}
