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

#ifndef FLICFORQ_ANALYSIS_HPP_
#define FLICFORQ_ANALYSIS_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "flicforq/compiler.hpp"
#include "flicforq/integrator.hpp"
#include "flicforq/pauli.hpp"

namespace flicforq {

/// Bloch vector of the reduced state of `qubit` (1 or 2).
Vector3d reduced_bloch(const DensityState& rho, int qubit);

/// Wootters concurrence. Eigenvalues in [-tol, 0) are clamped to zero;
/// anything lower throws NegativeEigenvalue. The default admits the positivity
/// error of RK4 at its default resolution over a long pulse (~2e-6).
double concurrence(const DensityState& rho, double tol = 1e-5);

/// <psi| rho |psi>.
double state_fidelity(const DensityState& rho, const Ket4cd& psi);

/// |(psi_ideal)^dagger U psi_in|^2 summary of a gate on the computational basis
/// and the process fidelity |Tr(U_ideal^dagger A U B)|^2 / 16 over local-z
/// frames A = Z(phi1, phi2), B = Z(theta1, theta2).
struct FidelityReport {
  std::map<std::string, double> per_state;  // "00", "01", "10", "11"
  double process = 0.0;
  std::array<double, 4> alignment{};  // phi1, phi2, theta1, theta2 in radians
  std::vector<std::string> notes;
};

/// Local z rotation exp(i (a sz1 + b sz2) / 2).
Mat4cd local_z(double a, double b);

/// `u_sim` is a rotating-frame unitary with any virtual-Z ledger already
/// composed in (see rotating_frame_unitary). Throws NotUnitary when
/// ||U^dagger U - 1|| exceeds 1e-6. With alignment the process fidelity is
/// maximized over the four local-z phases by coordinate-wise golden-section
/// refinement started from zero phases.
FidelityReport gate_fidelity(const Mat4cd& u_sim, const RotationWord& word, bool align_local_z);
FidelityReport gate_fidelity(const Mat4cd& u_sim, const Mat4cd& u_ideal, bool align_local_z);

struct SidebandReport {
  double q1_lower, q1_upper;  // w1z -+ amp_y1
  double q2_lower, q2_upper;  // w2z -+ amp_y2
  double gap;                 // (w1z - amp_y1) - (w2z + amp_y2)
  bool resonant;
};

SidebandReport sideband_check(const SystemParams& p, double amp_y1, double amp_y2,
                              double tol = 1e-12);

enum class Spectator { kZero, kPlus };

/// One-qubit gate error for a pi/2 rotation Axis_qubit^(1/2) with the other
/// qubit idle in `spectator`: 1 - average gate fidelity of the target qubit's
/// reduced channel (mean over the six Pauli eigenstates). With `align` the
/// best target-qubit z frame before and after the gate is used, as a virtual-Z
/// frame update would.
double one_qubit_gate_error(const SystemParams& p, int qubit, Axis axis, Spectator spectator,
                            bool echo = false, bool align = true,
                            const StepPolicy& policy = {});

struct OneQubitBudget {
  double parasitic_angle;   // arccos(wxx * t2_sync), NaN when the argument exceeds 1
  double parasitic_argument;  // wxx * t2_sync
  double simulated_error;   // worst case over targets, axes and spectators
  double unaligned_error;   // same metric without the z-frame alignment
  std::string worst_case;   // e.g. "Y1 spectator |+>"
};

OneQubitBudget one_qubit_error_budget(const SystemParams& p, bool echo = false,
                                      const StepPolicy& policy = {});

/// True iff both reduced Bloch vectors have norm <= tol and purity >= 1 - 2 tol.
bool entanglement_flag(const DensityState& rho, double tol);

}  // namespace flicforq

#endif  // FLICFORQ_ANALYSIS_HPP_
