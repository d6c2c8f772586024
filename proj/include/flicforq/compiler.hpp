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

// Gate-to-pulse compilation on the sync grid.
//
// One-qubit pi/2 rotations use amplitude delta/8 for 4 pi / delta (two grid
// periods). Two-qubit pulses drive both qubits at delta/2 for 4 pi / wxx
// starting on the grid; the refocused variant negates one qubit's drive at the
// midpoint, cancelling the Z1Z2 factor and leaving (X1X2)^(+-1/2).

#ifndef FLICFORQ_COMPILER_HPP_
#define FLICFORQ_COMPILER_HPP_

#include "flicforq/model.hpp"
#include "flicforq/pauli.hpp"

namespace flicforq {

enum class Axis { kX, kY };

/// Which rotation each positive drive quadrature produces in the rotating
/// frame. x_sign = -1 means a positive in-phase amplitude gives X^(-a).
/// xx_sign is the sign of the exponent of X1X2 realized by the refocused pulse.
struct ChannelCalibration {
  double x_sign = -1.0;
  double y_sign = 1.0;
  double xx_sign = -1.0;

  double sign(Axis a) const { return a == Axis::kX ? x_sign : y_sign; }

  friend bool operator==(const ChannelCalibration&, const ChannelCalibration&) = default;
};

/// Determines the calibration by simulating pi/2 pulses on each quadrature and
/// one refocused two-qubit pulse, and comparing the rotating-frame
/// propagators with the ideal rotations of either sign.
ChannelCalibration calibrate_channels(const SystemParams& p);

/// 4 pi / delta.
double one_qubit_duration(const SystemParams& p);
/// 4 pi / wxx.
double two_qubit_duration(const SystemParams& p);

/// One-qubit rotation Axis_q^(angle/pi). |angle| <= pi/2.
PulseSegment compile_one_qubit(const SystemParams& p, int qubit, Axis axis, double angle,
                               double start, const ChannelCalibration& cal = {});

/// Unrefocused entangling pulse (Z1Z2)^(-1/2)(X1X2)^(1/2) up to calibration
/// signs and local z.
PulseSequence compile_D(const SystemParams& p, double start);

/// Refocused pulse; the flipped qubit defaults to qubit 2.
PulseSequence compile_xx_half(const SystemParams& p, double start, int flip_qubit = 2);

/// X2^(1/2) Y1^(1/2) (X1X2)^(1/2) Y1^(-1/2), scheduled back to back, followed
/// by a virtual Z1^(1/2) at the end.
PulseSequence compile_cnot(const SystemParams& p, const ChannelCalibration& cal = {},
                           int flip_qubit = 2);

/// Single pi/2 gates as standalone sequences (CLI "x90", "y90" on qubit 1).
PulseSequence compile_single(const SystemParams& p, int qubit, Axis axis, double angle,
                             const ChannelCalibration& cal = {});

/// Splits one-qubit segment `index` in half and inserts a pi pulse about y on
/// the idle qubit after each half. Later segments and ledger entries move by
/// 2 * (4 pi / delta).
PulseSequence insert_decoupling(const SystemParams& p, const PulseSequence& seq,
                                std::size_t index, const ChannelCalibration& cal = {});

/// Inverse of insert_decoupling for the host that now starts at `index`.
PulseSequence remove_decoupling(const SystemParams& p, const PulseSequence& seq,
                                std::size_t index);

PulseSequence virtual_z(PulseSequence seq, int qubit, double angle, double t);

/// Shortest idle time after which the relative precession phase delta * t
/// equals `angle` modulo 2 pi.
double z_wait_duration(const SystemParams& p, double angle);

}  // namespace flicforq

#endif  // FLICFORQ_COMPILER_HPP_
