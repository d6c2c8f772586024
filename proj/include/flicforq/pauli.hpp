// Copyright 2026 The flicforq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Two-qubit Pauli strings and rotation words.
//
// A rotation P^a is exp(i * a * pi * P / 2), so X1 = i sigma1x and
// (X1X2)^(1/2) = (1 + i sigma1x sigma2x) / sqrt(2). A RotationWord is listed
// in time order: element 0 acts first, so its unitary is the right-to-left
// product U_{n-1} ... U_1 U_0.

#ifndef FLICFORQ_PAULI_HPP_
#define FLICFORQ_PAULI_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flicforq/error.hpp"
#include "flicforq/types.hpp"

namespace flicforq {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliString {
  std::uint8_t phase = 0;  // global factor i^phase
  Pauli q1 = Pauli::I;
  Pauli q2 = Pauli::I;

  int index() const { return 4 * static_cast<int>(q1) + static_cast<int>(q2); }
  bool is_hermitian() const { return phase % 2 == 0; }
  bool is_identity() const { return q1 == Pauli::I && q2 == Pauli::I; }

  static PauliString from_index(int index, std::uint8_t phase = 0) {
    return {phase, static_cast<Pauli>(index / 4), static_cast<Pauli>(index % 4)};
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

PauliString pauli_multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return pauli_multiply(a, b);
}
PauliString operator-(const PauliString& p);

bool commutes(const PauliString& a, const PauliString& b);

/// Parses an axis such as "X1", "Z2" or "X1X2" (phase +1).
PauliString parse_axis(std::string_view text);
/// "X1X2", "-Y1", "+iZ2", "I".
std::string to_string(const PauliString& p);

template <typename Scalar = double>
Mat2<Scalar> pauli_matrix(Pauli p) {
  using C = Complex<Scalar>;
  Mat2<Scalar> m;
  switch (p) {
    case Pauli::I: m << C(1), C(0), C(0), C(1); break;
    case Pauli::X: m << C(0), C(1), C(1), C(0); break;
    case Pauli::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case Pauli::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

template <typename Scalar = double>
Complex<Scalar> phase_factor(std::uint8_t phase) {
  static constexpr int re[4] = {1, 0, -1, 0};
  static constexpr int im[4] = {0, 1, 0, -1};
  return {Scalar(re[phase % 4]), Scalar(im[phase % 4])};
}

template <typename Scalar = double>
Mat4<Scalar> to_matrix(const PauliString& p) {
  return phase_factor<Scalar>(p.phase) *
         kron<Scalar>(pauli_matrix<Scalar>(p.q1), pauli_matrix<Scalar>(p.q2));
}

/// Hermitian operator sum_k coeffs[k] * P_k.
template <typename Scalar = double>
Mat4<Scalar> to_matrix(const PauliVector& coeffs) {
  Mat4<Scalar> m = Mat4<Scalar>::Zero();
  for (int k = 0; k < 16; ++k)
    if (coeffs[k] != 0.0) m += Scalar(coeffs[k]) * to_matrix<Scalar>(PauliString::from_index(k));
  return m;
}

/// Pauli-basis coordinates Tr(P_k M) / 4 (real parts; exact for Hermitian M).
PauliVector pauli_coordinates(const Mat4cd& m);

struct Rotation {
  PauliString axis;  // Hermitian: phase +1 or -1
  double exponent = 0.0;

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

using RotationWord = std::vector<Rotation>;

template <typename Scalar = double>
Mat4<Scalar> rotation_unitary(const Rotation& r) {
  if (!r.axis.is_hermitian()) throw Error("rotation axis must be Hermitian");
  const Scalar theta = Scalar(r.exponent) * Scalar(kPi) / Scalar(2);
  return Complex<Scalar>(std::cos(theta)) * Mat4<Scalar>::Identity() +
         Complex<Scalar>(0, std::sin(theta)) * to_matrix<Scalar>(r.axis);
}

template <typename Scalar = double>
Mat4<Scalar> word_unitary(const RotationWord& word) {
  Mat4<Scalar> u = Mat4<Scalar>::Identity();
  for (const auto& r : word) u = rotation_unitary<Scalar>(r) * u;
  return u;
}

/// U p U^dagger for a Clifford word. Throws NonCliffordExponent when an
/// exponent is not a multiple of 1/2.
PauliString conjugate_pauli(const RotationWord& word, const PauliString& p);

/// (Z1Z2)^(-1/2) (X1X2)^(1/2), listed as [(X1X2, 1/2), (Z1Z2, -1/2)].
RotationWord build_D();

/// X2^(1/2) Y1^(1/2) (X1X2)^(1/2) Y1^(-1/2) Z1^(1/2) in time order.
RotationWord build_cnot_word();

/// CNOT with qubit 1 as control.
Mat4cd cnot_matrix();

/// Whitespace-separated "<axis>^<num>/<den>" tokens.
RotationWord parse_word(std::string_view text);
std::string format_word(const RotationWord& word);

/// True iff min over unit phases phi of max_ij |U - phi V| <= tol. The phase
/// is taken from the overlap Tr(V^dagger U), which is optimal in Frobenius
/// norm and within tol of the max-norm optimum whenever the test passes.
template <typename DerivedU, typename DerivedV>
bool equal_up_to_global_phase(const Eigen::MatrixBase<DerivedU>& u,
                              const Eigen::MatrixBase<DerivedV>& v, double tol) {
  const auto overlap = (v.adjoint() * u).trace();
  const double mag = std::abs(overlap);
  if (mag == 0.0) return u.cwiseAbs().maxCoeff() <= tol && v.cwiseAbs().maxCoeff() <= tol;
  const auto phase = overlap / mag;
  return (u - phase * v).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace flicforq

#endif  // FLICFORQ_PAULI_HPP_
