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

// Exact time evolution of the two-qubit density operator.
//
// The state is rho = (1 + sum_a c_a P_a) / 4 over the 15 non-identity Pauli
// strings, and the von Neumann equation becomes 15 real linear ODEs
// dc/dt = M(t) c. evolve() integrates them with fixed-step classical RK4 in
// the lab frame. evolve_oracle() is an independent route: 4x4 propagators from
// exact exponentials of a fourth-order Magnus generator on each substep, with
// substep doubling until successive runs agree.
//
// No rotating-wave approximation is made anywhere. Steps never cross a
// segment edge, a refocusing flip, an envelope corner or a sample time.

#ifndef FLICFORQ_INTEGRATOR_HPP_
#define FLICFORQ_INTEGRATOR_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "flicforq/model.hpp"
#include "flicforq/types.hpp"

namespace flicforq {

using Vector15 = Eigen::Matrix<double, 15, 1>;
using Matrix15 = Eigen::Matrix<double, 15, 15>;

/// Position of Pauli index k (1..15) in the 15-vector, and back.
inline int slot_of(int pauli_index) { return pauli_index - 1; }
inline int pauli_of(int slot) { return slot + 1; }

struct DensityState {
  Vector15 c = Vector15::Zero();

  static DensityState maximally_mixed() { return {}; }
  static DensityState from_matrix(const Mat4cd& rho);
  static DensityState from_ket(const Ket4cd& psi);
  /// Product state from two Bloch vectors.
  static DensityState product(const Vector3d& bloch1, const Vector3d& bloch2);
  /// Computational basis state from "00", "01", "10" or "11".
  static DensityState basis(int q1_bit, int q2_bit);

  Mat4cd matrix() const;
  double purity() const { return 0.25 * (1.0 + c.squaredNorm()); }
  double coefficient(const PauliString& p) const { return c[slot_of(p.index())]; }
};

double trace_distance(const DensityState& a, const DensityState& b);

enum class Frame { kLab, kRotating };

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityState> states;
  Frame frame = Frame::kLab;

  const DensityState& final_state() const { return states.back(); }
};

/// Sparse structure constants: dc[out]/dt += coef * h[beta] * c[in] where
/// H = sum_beta h[beta] P_beta.
struct StructureTerm {
  int out;   // slot
  int beta;  // Pauli index of the Hamiltonian term (1..15)
  int in;    // slot
  double coef;
};

const std::vector<StructureTerm>& structure_constants();

/// Generator M(h) with dc/dt = M c.
Matrix15 liouvillian(const PauliVector& h);

struct StepPolicy {
  int steps_per_period = 200;  // per period of the fastest carrier
  /// Spacing of the thinned output grid; <= 0 selects t0_sync / 8.
  double sample_interval = 0.0;
  /// Compares every step against two half steps and throws StepTooCoarse
  /// when the difference exceeds 1e-8 per unit time.
  bool richardson_check = false;
};

Trajectory evolve(const SystemParams& p, const PulseSequence& seq, const DensityState& rho0,
                  const StepPolicy& policy = {});

struct OraclePolicy {
  int substeps_per_period = 16;
  int max_doublings = 8;
  double tolerance = 1e-9;
  double sample_interval = 0.0;
};

Trajectory evolve_oracle(const SystemParams& p, const PulseSequence& seq,
                         const DensityState& rho0, const OraclePolicy& policy = {});

/// Lab-frame unitary of the physical pulses over [0, total_time] (Magnus
/// stepper, exactly unitary per step). Throws StepTooCoarse when the
/// unitarity defect exceeds 1e-9.
Mat4cd propagator_of_sequence(const SystemParams& p, const PulseSequence& seq,
                              const StepPolicy& policy = {});

/// Rotating-frame unitary including the virtual-Z ledger:
/// V(T) U(T, 0) with ledger rotations inserted at their times.
Mat4cd rotating_frame_unitary(const SystemParams& p, const PulseSequence& seq,
                              const StepPolicy& policy = {});

/// V(t) = exp(i t (w1z s1z + w2z s2z) / 2).
Mat4cd frame_rotation(const SystemParams& p, double t);

/// Throws WrongFrame unless the input is in the lab frame.
DensityState to_rotating_frame(const DensityState& lab, const SystemParams& p, double t,
                               Frame frame = Frame::kLab);
Trajectory to_rotating_frame(const Trajectory& lab, const SystemParams& p);

/// Composes the virtual-Z ledger into a rotating-frame trajectory: each sample
/// at or after an entry's time is conjugated by that entry's rotation.
/// Throws WrongFrame for lab-frame input.
Trajectory apply_virtual_z(const Trajectory& rotating, const PulseSequence& seq);

/// Breakpoints at which steps must end: 0, total time, segment edges, flips,
/// envelope corners, ledger entries and the thinned sample grid.
std::vector<double> breakpoints(const SystemParams& p, const PulseSequence& seq,
                                double sample_interval);

/// CSV with header t,frame,cx1,cy1,cz1,cx2,cy2,cz2 and, when `full`, the
/// nine two-qubit correlators c_xx..c_zz. 12 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, bool full = false);

}  // namespace flicforq

#endif  // FLICFORQ_INTEGRATOR_HPP_
