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
 * Splitting coefficient sets for e^{(H1 + i H2) t}.
 *
 * A step of size dt applies, in order,
 *   e^{H1 a_0 dt}, e^{i H2 b_0 dt}, e^{H1 a_1 dt}, ..., e^{H1 a_{m} dt}
 * where the dissipative coefficients a_i are complex with Re(a_i) > 0 and the
 * unitary coefficients b_i are real and positive.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsplit {

using complex_t = std::complex<double>;

enum class Symmetry { none, palindromic, symmetric_conjugate };

struct SplittingScheme {
  std::string name;
  int order = 1;
  std::vector<complex_t> a;  // dissipative, fractions of dt
  std::vector<double> b;     // unitary, fractions of dt
  std::optional<Symmetry> declared_symmetry;
};

inline std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::palindromic:
      return "palindromic";
    case Symmetry::symmetric_conjugate:
      return "symmetric-conjugate";
    case Symmetry::none:
      break;
  }
  return "none";
}

struct ValidationReport {
  std::string name;
  complex_t sum_a;
  double sum_b = 0.0;
  double min_re_a = 0.0;
  double min_b = 0.0;
  Symmetry symmetry = Symmetry::none;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline SplittingScheme make_lie() { return {"lie", 1, {1.0}, {1.0}, Symmetry::none}; }

inline SplittingScheme make_strang() {
  return {"strang", 2, {0.5, 0.5}, {1.0}, Symmetry::palindromic};
}

inline SplittingScheme make_castella4() {
  const complex_t a0{1.0 / 10.0, -1.0 / 30.0};
  const complex_t a1{4.0 / 15.0, 2.0 / 15.0};
  const complex_t a2{4.0 / 15.0, -1.0 / 5.0};
  return {"castella4",         4, {a0, a1, a2, a1, a0}, {0.25, 0.25, 0.25, 0.25},
          Symmetry::palindromic};
}

inline SplittingScheme make_bernier6() {
  // a_{15-i} = conj(a_i), b_{14-i} = b_i
  const complex_t half_a[8] = {
      {0.03, -0.0028985018717006387},
      {0.08826477458499815, 0.019065371639195743},
      {0.07026507350715319, -0.05226928459003309},
      {0.051044248093469226, 0.07580262639617709},
      {0.040506044227148555, -0.07981221177569087},
      {0.03061653536468681, 0.07254698089135206},
      {0.10349890449629792, -0.03539199012223482},
      {0.08580441972624608, 0.011182129837497105},
  };
  const double half_b[8] = {
      0.08092666015955027,  0.06736427978832901, 0.057276240999706116,
      0.06428730473896961,  0.05528732144478408, 0.02566179136566552,
      0.10559039215618958,  0.08721201869361150,
  };
  SplittingScheme s{"bernier6", 6, {}, {}, Symmetry::symmetric_conjugate};
  s.a.assign(std::begin(half_a), std::end(half_a));
  for (int i = 7; i >= 0; --i) s.a.push_back(std::conj(half_a[i]));
  s.b.assign(std::begin(half_b), std::end(half_b));
  for (int i = 6; i >= 0; --i) s.b.push_back(half_b[i]);
  return s;
}

}  // namespace detail

/// The four built-in schemes, ordered by increasing order:
/// lie (1), strang (2), castella4 (4), bernier6 (6).
inline const std::vector<SplittingScheme>& builtin_schemes() {
  static const std::vector<SplittingScheme> schemes = {
      detail::make_lie(), detail::make_strang(), detail::make_castella4(),
      detail::make_bernier6()};
  return schemes;
}

inline const SplittingScheme& find_scheme(std::string_view name) {
  for (const auto& s : builtin_schemes())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown splitting scheme '" + std::string(name) +
                              "' (expected lie, strang, castella4, bernier6)");
}

inline Symmetry detect_symmetry(const SplittingScheme& s,
                                double tol = 1e-15) {
  const auto m = s.a.size();
  if (m < 2) return Symmetry::none;
  auto b_mirrored = [&] {
    for (std::size_t i = 0; i < s.b.size(); ++i)
      if (std::abs(s.b[i] - s.b[s.b.size() - 1 - i]) > tol) return false;
    return true;
  };
  if (!b_mirrored()) return Symmetry::none;

  bool palindromic = true;
  bool conjugate = true;
  bool has_imag = false;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& x = s.a[i];
    const auto& y = s.a[m - 1 - i];
    palindromic = palindromic && std::abs(x - y) <= tol;
    conjugate = conjugate && std::abs(x - std::conj(y)) <= tol;
    has_imag = has_imag || std::abs(x.imag()) > tol;
  }
  // With real a both tests pass; report the plain mirror symmetry.
  if (palindromic) return Symmetry::palindromic;
  if (conjugate && has_imag) return Symmetry::symmetric_conjugate;
  return Symmetry::none;
}

inline ValidationReport validate_scheme(const SplittingScheme& s) {
  ValidationReport r;
  r.name = s.name;
  r.symmetry = detect_symmetry(s);
  r.min_re_a = std::numeric_limits<double>::infinity();
  r.min_b = std::numeric_limits<double>::infinity();
  for (const auto& x : s.a) {
    r.sum_a += x;
    r.min_re_a = std::min(r.min_re_a, x.real());
  }
  for (double x : s.b) {
    r.sum_b += x;
    r.min_b = std::min(r.min_b, x);
  }

  if (s.a.empty() || s.b.empty()) {
    r.violations.emplace_back("empty coefficient list");
    return r;
  }
  if (std::abs(r.sum_a - 1.0) > 1e-9) r.violations.emplace_back("sum(a) != 1");
  if (std::abs(r.sum_b - 1.0) > 1e-9) r.violations.emplace_back("sum(b) != 1");
  if (!(r.min_re_a > 0.0)) r.violations.emplace_back("Re(a_i) <= 0");
  if (!(r.min_b > 0.0)) r.violations.emplace_back("b_i <= 0");

  const bool single = s.a.size() == 1 && s.b.size() == 1;
  if (!single && s.a.size() != s.b.size() + 1)
    r.violations.emplace_back("len(a) must equal len(b) + 1");
  if (s.declared_symmetry && *s.declared_symmetry != r.symmetry)
    r.violations.emplace_back("declared symmetry " +
                              std::string(to_string(*s.declared_symmetry)) +
                              " not detected");
  return r;
}

}  // namespace qsplit
