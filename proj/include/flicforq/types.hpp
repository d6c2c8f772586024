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

// Dense types shared by every module.
//
// Basis ordering for two qubits is |00>, |01>, |10>, |11> with qubit 1 the
// left (most significant) tensor factor, and sigma_z|0> = +|0>.

#ifndef FLICFORQ_TYPES_HPP_
#define FLICFORQ_TYPES_HPP_

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace flicforq {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Mat2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar>
using Mat4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;
template <typename Scalar>
using Ket4 = Eigen::Matrix<Complex<Scalar>, 4, 1>;

using Mat2cd = Mat2<double>;
using Mat4cd = Mat4<double>;
using Ket4cd = Ket4<double>;

/// Real coefficients over the 16 two-qubit Pauli strings, indexed by
/// 4 * factor1 + factor2 with I=0, X=1, Y=2, Z=3.
using PauliVector = Eigen::Matrix<double, 16, 1>;

using Vector3d = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;

template <typename Scalar>
Mat4<Scalar> kron(const Mat2<Scalar>& a, const Mat2<Scalar>& b) {
  Mat4<Scalar> out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
  return out;
}

template <typename Scalar>
Ket4<Scalar> kron(const Eigen::Matrix<Complex<Scalar>, 2, 1>& a,
                  const Eigen::Matrix<Complex<Scalar>, 2, 1>& b) {
  Ket4<Scalar> out;
  out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return out;
}

}  // namespace flicforq

#endif  // FLICFORQ_TYPES_HPP_
