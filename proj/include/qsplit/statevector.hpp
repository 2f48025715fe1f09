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
 * Dense statevector emulator with postselection bookkeeping.
 *
 * Qubit r addresses bit r of the basis index (little-endian), so the basis
 * state |q_{n-1} ... q_1 q_0> has index sum_r 2^r q_r.
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsplit {

using complex_t = std::complex<double>;

/// Row-major 2x2 gate matrix {m00, m01, m10, m11}.
struct Gate2x2 {
  std::array<complex_t, 4> m{1.0, 0.0, 0.0, 1.0};

  const complex_t& operator()(int row, int col) const { return m[2 * row + col]; }

  static Gate2x2 identity() { return {}; }

  static Gate2x2 x() { return {{0.0, 1.0, 1.0, 0.0}}; }

  /// R_Y(theta) = exp(-i theta/2 Y).
  static Gate2x2 ry(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {{c, -s, s, c}};
  }

  /// R_Z(theta) = exp(-i theta/2 Z).
  static Gate2x2 rz(double theta) {
    return {{std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)}};
  }

  /// P(theta) = |0><0| + e^{i theta} |1><1|.
  static Gate2x2 phase(double theta) {
    return {{1.0, 0.0, 0.0, std::polar(1.0, theta)}};
  }

  Gate2x2 adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }

  friend Gate2x2 operator*(const Gate2x2& l, const Gate2x2& r) {
    return {{l.m[0] * r.m[0] + l.m[1] * r.m[2], l.m[0] * r.m[1] + l.m[1] * r.m[3],
             l.m[2] * r.m[0] + l.m[3] * r.m[2], l.m[2] * r.m[1] + l.m[3] * r.m[3]}};
  }
};

class DegeneratePostselection : public std::runtime_error {
 public:
  explicit DegeneratePostselection(const std::string& what)
      : std::runtime_error(what) {}
};

class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int n_qubits) : n_qubits_(check_width(n_qubits)) {
    amp_.assign(std::size_t{1} << n_qubits_, complex_t{0.0, 0.0});
    amp_[0] = 1.0;
  }

  /// Normalizes the given amplitudes; magnitude starts at 1.
  StateVector(int n_qubits, std::vector<complex_t> amplitudes)
      : n_qubits_(check_width(n_qubits)), amp_(std::move(amplitudes)) {
    if (amp_.size() != (std::size_t{1} << n_qubits_))
      throw std::invalid_argument("amplitude count must equal 2^n_qubits");
    double nrm = 0.0;
    for (const auto& a : amp_) nrm += std::norm(a);
    nrm = std::sqrt(nrm);
    if (!(nrm > 0.0)) throw std::invalid_argument("zero state vector");
    for (auto& a : amp_) a /= nrm;
  }

  static StateVector basis(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.size()) throw std::out_of_range("basis index out of range");
    s.amp_[0] = 0.0;
    s.amp_[index] = 1.0;
    return s;
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amp_.size(); }
  std::span<const complex_t> amplitudes() const { return amp_; }
  const complex_t& operator[](std::size_t i) const { return amp_[i]; }

  /// Unnormalized L2 norm accumulated through postselections.
  double magnitude() const { return magnitude_; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
  }

  void apply_1q(const Gate2x2& g, int target) {
    check_qubit(target);
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amp_.size(); base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const complex_t a0 = amp_[i];
        const complex_t a1 = amp_[i + stride];
        amp_[i] = g.m[0] * a0 + g.m[1] * a1;
        amp_[i + stride] = g.m[2] * a0 + g.m[3] * a1;
      }
    }
  }

  /// Applies g to target on the subspace where control is |1>.
  void apply_controlled(const Gate2x2& g, int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target)
      throw std::invalid_argument("control and target must differ");
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t cbit = std::size_t{1} << control;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if ((i & tbit) || !(i & cbit)) continue;
      const complex_t a0 = amp_[i];
      const complex_t a1 = amp_[i | tbit];
      amp_[i] = g.m[0] * a0 + g.m[1] * a1;
      amp_[i | tbit] = g.m[2] * a0 + g.m[3] * a1;
    }
  }

  /**
   * Projects `qubit` onto `outcome`, renormalizes, and returns the probability
   * p of that outcome. The tracked magnitude is multiplied by sqrt(p).
   */
  double postselect(int qubit, int outcome) {
    check_qubit(qubit);
    if (outcome != 0 && outcome != 1)
      throw std::invalid_argument("postselection outcome must be 0 or 1");
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t keep = outcome ? bit : 0;
    double p = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i)
      if ((i & bit) == keep) p += std::norm(amp_[i]);
    if (p < 1e-300)
      throw DegeneratePostselection("postselection on qubit " +
                                    std::to_string(qubit) +
                                    " has zero probability");
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < amp_.size(); ++i)
      amp_[i] = ((i & bit) == keep) ? amp_[i] * scale : complex_t{0.0, 0.0};
    magnitude_ *= std::sqrt(p);
    return p;
  }

 private:
  static int check_width(int n) {
    if (n < 1 || n > 30)
      throw std::invalid_argument("n_qubits must lie in [1, 30]");
    return n;
  }

  void check_qubit(int q) const {
    if (q < 0 || q >= n_qubits_)
      throw std::out_of_range("qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n_qubits_) +
                              " qubits");
  }

  int n_qubits_;
  std::vector<complex_t> amp_;
  double magnitude_ = 1.0;
};

/// Free-function forms returning a new state.
inline StateVector apply_1q(StateVector s, const Gate2x2& g, int target) {
  s.apply_1q(g, target);
  return s;
}

inline StateVector apply_controlled(StateVector s, const Gate2x2& g,
                                    int control, int target) {
  s.apply_controlled(g, control, target);
  return s;
}

inline std::pair<double, StateVector> postselect(StateVector s, int qubit,
                                                 int outcome) {
  const double p = s.postselect(qubit, outcome);
  return {p, std::move(s)};
}

/// epsilon = ||amp - reference||_2; the reference must already be unit norm.
inline double fidelity_error(std::span<const complex_t> amp,
                             std::span<const complex_t> reference) {
  if (amp.size() != reference.size())
    throw std::invalid_argument("fidelity_error: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < amp.size(); ++i) s += std::norm(amp[i] - reference[i]);
  return std::sqrt(s);
}

inline double fidelity_error(const StateVector& state,
                             std::span<const complex_t> reference) {
  return fidelity_error(state.amplitudes(), reference);
}

}  // namespace qsplit
