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
 * Classical oracles for the damped-wave problem: closed-form mode propagators,
 * dense matrix exponentials, the DFT, Hermitian splitting and state encoding.
 */

#pragma once

#include <unsupported/Eigen/FFT>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsplit/circuits.hpp"
#include "qsplit/dense.hpp"
#include "qsplit/statevector.hpp"

namespace qsplit {

/// Spectral displacement u = phi_hat_j and scaled velocity v = d_t phi_hat_j / omega_j.
struct ModePair {
  complex_t u;
  complex_t v;
};

/// e^{M t} by scaling and squaring (Eigen's Pade implementation).
inline ComplexMatrix dense_expm(const ComplexMatrix& m, double t = 1.0) {
  if (m.rows() != m.cols()) throw std::invalid_argument("dense_expm needs a square matrix");
  if (m.rows() > 64) throw std::invalid_argument("dense_expm supports dimension <= 64");
  const ComplexMatrix scaled = m * t;
  return scaled.exp();
}

/**
 * e^{(W + D) t} for W = [[0, w], [-w, 0]], D = diag(0, -gamma):
 *   e^{-gamma t/2} [cosh(mu t) I + sinh(mu t)/mu (A + gamma/2 I)],
 * mu^2 = gamma^2/4 - w^2. Near critical damping the mu -> 0 limit is used.
 */
inline Eigen::Matrix2cd mode_propagator(double omega, double gamma, double t) {
  if (omega < 0.0 || gamma < 0.0)
    throw std::invalid_argument("mode_propagator needs omega >= 0 and gamma >= 0");
  const double disc = gamma * gamma / 4.0 - omega * omega;
  double ch = 1.0;  // cosh(mu t), or cos(nu t) when underdamped
  double sh = t;    // sinh(mu t)/mu, or sin(nu t)/nu
  if (std::abs(disc) > 1e-12 * gamma * gamma) {
    if (disc > 0.0) {
      const double mu = std::sqrt(disc);
      ch = std::cosh(mu * t);
      sh = std::sinh(mu * t) / mu;
    } else {
      const double nu = std::sqrt(-disc);
      ch = std::cos(nu * t);
      sh = std::sin(nu * t) / nu;
    }
  }
  const double decay = std::exp(-gamma * t / 2.0);
  Eigen::Matrix2cd p;
  p << decay * (ch + sh * gamma / 2.0), decay * sh * omega,
      -decay * sh * omega, decay * (ch - sh * gamma / 2.0);
  return p;
}

/// M = H1 + i H2 with H1 = (M + M^dagger)/2 and H2 = (M - M^dagger)/(2i).
inline std::pair<ComplexMatrix, ComplexMatrix> hermitian_split(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_split needs a square matrix");
  const ComplexMatrix adj = m.adjoint();
  ComplexMatrix h1 = (m + adj) / 2.0;
  ComplexMatrix h2 = (m - adj) / complex_t(0.0, 2.0);
  return {std::move(h1), std::move(h2)};
}

/// Unitary DFT, X[j] = sum_k x[k] e^{+2 pi i j k / N} / sqrt(N); matches qft_circuit.
inline std::vector<complex_t> dft(std::span<const complex_t> x) {
  std::vector<complex_t> in(x.begin(), x.end());
  if (in.size() <= 1) return in;  // kissfft does not handle N = 1
  std::vector<complex_t> out;
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(out, in);
  const double s = 1.0 / std::sqrt(static_cast<double>(x.size()));
  for (auto& v : out) v *= s;
  return out;
}

inline std::vector<complex_t> inverse_dft(std::span<const complex_t> x) {
  std::vector<complex_t> in(x.begin(), x.end());
  if (in.size() <= 1) return in;  // kissfft does not handle N = 1
  std::vector<complex_t> out;
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.fwd(out, in);
  const double s = 1.0 / std::sqrt(static_cast<double>(x.size()));
  for (auto& v : out) v *= s;
  return out;
}

/// Encoded initial condition: unit state plus the norm removed by encoding.
struct EncodedState {
  StateVector state;
  double norm = 1.0;
  std::vector<ModePair> modes;  // unnormalized spectral pairs, data index order
};

/**
 * Places spectral pairs on the register layout: data index j, selector |0>
 * for u and |1> for v, ancilla |0>. Any mode with omega_j = 0 must carry
 * v = 0, since the scaled velocity is undefined there.
 */
inline EncodedState encode_spectral(const ModeSystem& sys, std::vector<ModePair> modes) {
  const std::uint64_t n_data = std::uint64_t{1} << (sys.n * sys.d);
  if (modes.size() != n_data)
    throw std::invalid_argument("encode: expected 2^(n d) spectral modes");
  double norm2 = 0.0;
  for (const auto& m : modes) norm2 += std::norm(m.u) + std::norm(m.v);
  if (!(norm2 > 0.0)) throw std::invalid_argument("encode: zero initial condition");
  const double norm = std::sqrt(norm2);

  const std::uint64_t mask = sys.modes_per_dim() - 1;
  for (std::uint64_t j = 0; j < n_data; ++j) {
    bool zero_freq = true;
    for (int k = 0; k < sys.d; ++k)
      zero_freq = zero_freq && sys.omega((j >> (k * sys.n)) & mask) == 0.0;
    if (zero_freq && std::abs(modes[j].v) > 1e-12 * norm)
      throw std::invalid_argument(
          "encode: nonzero velocity in a zero-frequency mode");
  }

  std::vector<complex_t> amp(std::size_t{1} << sys.n_qubits(), complex_t{});
  for (std::uint64_t j = 0; j < n_data; ++j) {
    amp[j] = modes[j].u;
    amp[j | n_data] = modes[j].v;
  }
  return {StateVector(sys.n_qubits(), std::move(amp)), norm, std::move(modes)};
}

/// One-dimensional encoding from physical-space samples. `scaled_velocity` is
/// |c d_x|^{-1} d_t phi on the grid, whose DFT is d_t phi_hat / omega.
inline EncodedState encode_initial(const ModeSystem& sys, std::span<const double> phi,
                                   std::span<const double> scaled_velocity) {
  if (sys.d != 1) throw std::invalid_argument("encode_initial is one-dimensional");
  const std::size_t N = sys.modes_per_dim();
  if (phi.size() != N || scaled_velocity.size() != N)
    throw std::invalid_argument("encode_initial: arrays must have length 2^n");
  const std::vector<complex_t> p(phi.begin(), phi.end());
  const std::vector<complex_t> v(scaled_velocity.begin(), scaled_velocity.end());
  const auto u_hat = dft(p);
  const auto v_hat = dft(v);
  std::vector<ModePair> modes(N);
  for (std::size_t j = 0; j < N; ++j) modes[j] = {u_hat[j], v_hat[j]};
  return encode_spectral(sys, std::move(modes));
}

/// Inverse of encode_initial up to the global scale `norm`.
inline std::pair<std::vector<double>, std::vector<double>> decode_physical(
    const ModeSystem& sys, const StateVector& state, double norm) {
  if (sys.d != 1 || state.n_qubits() != sys.n_qubits())
    throw std::invalid_argument("decode_physical: layout mismatch");
  const std::size_t N = sys.modes_per_dim();
  std::vector<complex_t> u(N), v(N);
  for (std::size_t j = 0; j < N; ++j) {
    u[j] = state[j] * norm;
    v[j] = state[j | N] * norm;
  }
  const auto pu = inverse_dft(u);
  const auto pv = inverse_dft(v);
  std::vector<double> phi(N), vel(N);
  for (std::size_t i = 0; i < N; ++i) {
    phi[i] = pu[i].real();
    vel[i] = pv[i].real();
  }
  return {std::move(phi), std::move(vel)};
}

/// Grid samples of exp(-width (x/L - center)^2) at x_i = i L / N.
inline std::vector<double> gaussian_profile(std::size_t N, double width = 100.0,
                                            double center = 0.5) {
  std::vector<double> out(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(N) - center;
    out[i] = std::exp(-width * x * x);
  }
  return out;
}

/// Separable Gaussian with zero initial velocity in d dimensions.
inline EncodedState encode_gaussian(const ModeSystem& sys, double width = 100.0,
                                    double center = 0.5) {
  const std::size_t N = sys.modes_per_dim();
  const auto profile = gaussian_profile(N, width, center);
  const std::vector<complex_t> p(profile.begin(), profile.end());
  const auto u1 = dft(p);
  const std::uint64_t n_data = std::uint64_t{1} << (sys.n * sys.d);
  std::vector<ModePair> modes(n_data);
  for (std::uint64_t j = 0; j < n_data; ++j) {
    complex_t u = 1.0;
    for (int k = 0; k < sys.d; ++k) u *= u1[(j >> (k * sys.n)) & (N - 1)];
    modes[j] = {u, 0.0};
  }
  return encode_spectral(sys, std::move(modes));
}

/**
 * Mode frequency seen by the split wave circuits. In d > 1 the per-dimension
 * rotations act on the same selector about the same axis, so they add.
 */
inline double effective_omega(const ModeSystem& sys, std::uint64_t j) {
  const std::uint64_t mask = sys.modes_per_dim() - 1;
  double w = 0.0;
  for (int k = 0; k < sys.d; ++k) w += sys.omega((j >> (k * sys.n)) & mask);
  return w;
}

struct ExactSolution {
  std::vector<complex_t> unnormalized;  // full register layout, ancilla |0>
  std::vector<complex_t> unit;
  double norm = 0.0;
};

/// Per-mode exact propagation of the spectral pairs to time t.
inline ExactSolution exact_solution(const ModeSystem& sys, std::span<const ModePair> modes,
                                    double t) {
  const std::uint64_t n_data = std::uint64_t{1} << (sys.n * sys.d);
  if (modes.size() != n_data) throw std::invalid_argument("exact_solution: size mismatch");
  ExactSolution out;
  out.unnormalized.assign(std::size_t{1} << sys.n_qubits(), complex_t{});
  double norm2 = 0.0;
  for (std::uint64_t j = 0; j < n_data; ++j) {
    const Eigen::Matrix2cd p = mode_propagator(effective_omega(sys, j), sys.gamma, t);
    const complex_t u = p(0, 0) * modes[j].u + p(0, 1) * modes[j].v;
    const complex_t v = p(1, 0) * modes[j].u + p(1, 1) * modes[j].v;
    out.unnormalized[j] = u;
    out.unnormalized[j | n_data] = v;
    norm2 += std::norm(u) + std::norm(v);
  }
  out.norm = std::sqrt(norm2);
  out.unit = out.unnormalized;
  if (out.norm > 0.0)
    for (auto& a : out.unit) a /= out.norm;
  return out;
}

}  // namespace qsplit
