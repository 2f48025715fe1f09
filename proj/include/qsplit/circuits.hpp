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
 * Gate-level circuit descriptors and the spectral damped-wave circuits.
 *
 * Register layout for d spatial dimensions with n qubits each:
 *   data[k] = {k*n, ..., k*n + n - 1}, selector = n*d, ancilla = n*d + 1.
 * The selector distinguishes displacement (|0>) from scaled velocity (|1>).
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <locale>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsplit/dense.hpp"
#include "qsplit/statevector.hpp"

namespace qsplit {

enum class GateKind { RY, RZ, P, X, CNOT, CRY, CP };

inline std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::P: return "P";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CRY: return "CRY";
    case GateKind::CP: return "CP";
  }
  return "?";
}

inline bool is_controlled(GateKind k) {
  return k == GateKind::CNOT || k == GateKind::CRY || k == GateKind::CP;
}

/// CNOT-equivalent cost; a controlled rotation decomposes into two CNOTs.
inline int cnot_cost(GateKind k) {
  switch (k) {
    case GateKind::CNOT: return 1;
    case GateKind::CRY:
    case GateKind::CP: return 2;
    default: return 0;
  }
}

struct GateOp {
  GateKind kind = GateKind::X;
  double angle = 0.0;  // radians; rotations only
  int control = -1;    // -1 for uncontrolled gates
  int target = 0;

  /// The 2x2 block acting on the target (when the control, if any, is |1>).
  Gate2x2 matrix() const {
    switch (kind) {
      case GateKind::RY:
      case GateKind::CRY: return Gate2x2::ry(angle);
      case GateKind::RZ: return Gate2x2::rz(angle);
      case GateKind::P:
      case GateKind::CP: return Gate2x2::phase(angle);
      case GateKind::X:
      case GateKind::CNOT: return Gate2x2::x();
    }
    return Gate2x2::identity();
  }
};

struct RegisterLayout {
  std::vector<std::vector<int>> data;  // one register per spatial dimension
  int selector = 0;
  int ancilla = 1;

  static RegisterLayout standard(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("layout needs n >= 1 and d >= 1");
    RegisterLayout l;
    for (int k = 0; k < d; ++k) {
      std::vector<int> reg(n);
      for (int r = 0; r < n; ++r) reg[r] = k * n + r;
      l.data.push_back(std::move(reg));
    }
    l.selector = n * d;
    l.ancilla = n * d + 1;
    return l;
  }

  int n_qubits() const {
    int total = 2;
    for (const auto& reg : data) total += static_cast<int>(reg.size());
    return total;
  }
};

/// Periodic damped-wave mode system; lengths and times in consistent units.
struct ModeSystem {
  int n = 1;  // qubits per dimension
  int d = 1;  // spatial dimensions
  double c = 1.0;
  double L = 1.0;
  double gamma = 0.0;

  std::uint64_t modes_per_dim() const { return std::uint64_t{1} << n; }

  /// zeta = 4 pi c / L; zeta * t is the nondimensional wave time.
  double zeta() const { return 4.0 * std::numbers::pi * c / L; }

  /// omega_j = c |k_j| with k_j wrapped to (-N/2, N/2].
  double omega(std::uint64_t j) const {
    const std::uint64_t N = modes_per_dim();
    const std::uint64_t m = j < N / 2 ? j : N - j;
    return 2.0 * std::numbers::pi * c / L * static_cast<double>(m);
  }

  RegisterLayout layout() const { return RegisterLayout::standard(n, d); }
  int n_qubits() const { return n * d + 2; }
};

class Circuit {
 public:
  explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
  }

  int n_qubits() const { return n_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }

  /// True when a phase gate was emitted as R_Z (equal up to global phase).
  bool rz_substituted() const { return rz_substituted_; }
  void mark_rz_substituted() { rz_substituted_ = true; }

  Circuit& add(GateOp op) {
    auto in_range = [&](int q) { return q >= 0 && q < n_qubits_; };
    if (!in_range(op.target))
      throw std::out_of_range("gate target out of range");
    if (is_controlled(op.kind)) {
      if (!in_range(op.control))
        throw std::out_of_range("gate control out of range");
      if (op.control == op.target)
        throw std::invalid_argument("gate control and target must differ");
    } else {
      op.control = -1;
    }
    if (op.kind == GateKind::X || op.kind == GateKind::CNOT) op.angle = 0.0;
    ops_.push_back(op);
    return *this;
  }

  Circuit& ry(double theta, int q) { return add({GateKind::RY, theta, -1, q}); }
  Circuit& rz(double theta, int q) { return add({GateKind::RZ, theta, -1, q}); }
  Circuit& p(double theta, int q) { return add({GateKind::P, theta, -1, q}); }
  Circuit& x(int q) { return add({GateKind::X, 0.0, -1, q}); }
  Circuit& cnot(int c, int t) { return add({GateKind::CNOT, 0.0, c, t}); }
  Circuit& cry(double theta, int c, int t) { return add({GateKind::CRY, theta, c, t}); }
  Circuit& cp(double theta, int c, int t) { return add({GateKind::CP, theta, c, t}); }

  Circuit& append(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_)
      throw std::invalid_argument("appending circuit of different width");
    for (const auto& op : other.ops_) ops_.push_back(op);
    rz_substituted_ = rz_substituted_ || other.rz_substituted_;
    return *this;
  }

 private:
  int n_qubits_;
  std::vector<GateOp> ops_;
  bool rz_substituted_ = false;
};

inline long cnot_count(const Circuit& c) {
  long total = 0;
  for (const auto& op : c.ops()) total += cnot_cost(op.kind);
  return total;
}

inline void apply(const Circuit& c, StateVector& state) {
  if (c.n_qubits() != state.n_qubits())
    throw std::invalid_argument("circuit and state widths differ");
  for (const auto& op : c.ops()) {
    if (op.control >= 0)
      state.apply_controlled(op.matrix(), op.control, op.target);
    else
      state.apply_1q(op.matrix(), op.target);
  }
}

/// One op per line: `KIND angle control target`, control -1 when absent.
inline std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  for (const auto& op : c.ops())
    os << to_string(op.kind) << ' ' << op.angle << ' ' << op.control << ' '
       << op.target << '\n';
  return os.str();
}

/// Product of the embedded gate matrices in application order.
inline ComplexMatrix circuit_to_matrix(const Circuit& c) {
  if (c.n_qubits() > 12)
    throw std::invalid_argument("circuit_to_matrix supports at most 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  for (const auto& op : c.ops()) {
    const Gate2x2 g = op.matrix();
    const Eigen::Index tbit = Eigen::Index{1} << op.target;
    const Eigen::Index cbit = op.control >= 0 ? Eigen::Index{1} << op.control : 0;
    // Left-multiply: mix row pairs (i, i|tbit) where the control bit is set.
    for (Eigen::Index i = 0; i < dim; ++i) {
      if ((i & tbit) || (i & cbit) != cbit) continue;
      const Eigen::RowVectorXcd r0 = m.row(i);
      const Eigen::RowVectorXcd r1 = m.row(i | tbit);
      m.row(i) = g.m[0] * r0 + g.m[1] * r1;
      m.row(i | tbit) = g.m[2] * r0 + g.m[3] * r1;
    }
  }
  return m;
}

/**
 * Quantum Fourier transform on qubits 0..n-1 with the little-endian convention
 * and final qubit reversal, so that its matrix is
 *   F[j, k] = exp(2 pi i j k / 2^n) / 2^{n/2}.
 * Hadamard is emitted as RY(pi/2) followed by X; a swap as three CNOTs.
 */
inline Circuit qft_circuit(int n) {
  if (n < 1) throw std::invalid_argument("qft_circuit needs n >= 1");
  Circuit c(n);
  for (int q = n - 1; q >= 0; --q) {
    c.ry(std::numbers::pi / 2, q).x(q);
    for (int m = q - 1; m >= 0; --m)
      c.cp(std::numbers::pi / static_cast<double>(1 << (q - m)), m, q);
  }
  for (int q = 0; q < n / 2; ++q) {
    const int partner = n - 1 - q;
    c.cnot(q, partner).cnot(partner, q).cnot(q, partner);
  }
  return c;
}

/**
 * Exact wave evolution for one dimension's register: applies
 * R_Y^dagger(2 omega_j t) to the selector for every data index j, where
 * tau = zeta * t.
 *
 * The q_{n-1} CNOT sandwich flips the ladder's rotation sign on the upper half
 * of the spectrum, and the final q_{n-1}-controlled rotation adds the 2^n tau
 * offset, giving tau * (2^n - j) there.
 */
inline Circuit wave_evolution_circuit(const ModeSystem& sys, double tau, int dim = 0) {
  if (!std::isfinite(tau)) throw std::invalid_argument("wave time must be finite");
  if (dim < 0 || dim >= sys.d) throw std::out_of_range("dimension index out of range");
  const RegisterLayout layout = sys.layout();
  const auto& q = layout.data[dim];
  const int sel = layout.selector;
  const int msb = q.back();

  Circuit c(layout.n_qubits());
  c.cnot(msb, sel);
  for (int r = 0; r < sys.n; ++r)
    c.cry(-std::ldexp(tau, r), q[r], sel);
  c.cnot(msb, sel);
  c.cry(-std::ldexp(tau, sys.n), msb, sel);
  return c;
}

/// Selector-controlled R_Y(2 arccos e^{-x}) on the ancilla, x = gamma Re(a) dt.
/// Postselecting the ancilla on |0> scales the velocity amplitude by e^{-x}.
inline Circuit damping_real_circuit(double gamma_dt, const RegisterLayout& layout) {
  if (!(gamma_dt >= 0.0))
    throw std::invalid_argument("damping argument must be non-negative");
  Circuit c(layout.n_qubits());
  c.cry(2.0 * std::acos(std::exp(-gamma_dt)), layout.selector, layout.ancilla);
  return c;
}

/// Imaginary-time damping e^{i D Im(a) dt}: P(-gamma Im(a) dt) on the selector.
/// With use_rz the gate is R_Z of the same angle (global phase differs).
inline Circuit damping_phase_gate(double gamma_im_dt, const RegisterLayout& layout,
                                  bool use_rz = false) {
  Circuit c(layout.n_qubits());
  if (use_rz) {
    c.rz(-gamma_im_dt, layout.selector);
    c.mark_rz_substituted();
  } else {
    c.p(-gamma_im_dt, layout.selector);
  }
  return c;
}

}  // namespace qsplit
