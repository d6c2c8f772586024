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

// System parameters, pulse data and the lab-frame Hamiltonian
//
//   H = 1/2 [ w1z s1z + 2 (x1(t) cos(w1z t) + y1(t) sin(w1z t)) s1x
//           + w2z s2z + 2 (x2(t) cos(w2z t) + y2(t) sin(w2z t)) s2x
//           + wxx s1x s2x ].
//
// Frequencies are angular and measured in units of the mean Larmor frequency
// w0 = (w1z + w2z) / 2; times are in units of 1 / w0. Drive carriers are
// locked to the qubit frequencies and are phase-coherent with t = 0.
//
// The printed form of this Hamiltonian in the literature has "w1x(t) cos(w2rf t)"
// in the qubit-2 drive term; that is a typo and qubit 2's own in-phase
// amplitude is used here.

#ifndef FLICFORQ_MODEL_HPP_
#define FLICFORQ_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "flicforq/pauli.hpp"
#include "flicforq/types.hpp"

namespace flicforq {

struct SystemParams {
  double w1z = 1.05;
  double w2z = 0.95;
  double wxx = 0.01;

  double delta() const { return w1z - w2z; }
  double w0() const { return 0.5 * (w1z + w2z); }
  double t_swap() const { return 2.0 * kPi / wxx; }
  double t0_sync() const { return 2.0 * kPi / delta(); }
  double larmor(int qubit) const { return qubit == 1 ? w1z : w2z; }

  /// w1z = 1 + delta/2, w2z = 1 - delta/2.
  static SystemParams symmetric(double delta, double wxx) {
    return {1.0 + 0.5 * delta, 1.0 - 0.5 * delta, wxx};
  }
};

/// Throws InvalidParams unless delta > 0, 0 <= wxx <= delta / 2 and both
/// Larmor frequencies are positive.
void validate(const SystemParams& p);

enum class EnvelopeKind { kSquare, kRaisedCosine };

struct Envelope {
  EnvelopeKind kind = EnvelopeKind::kSquare;
  double rise = 0.0;

  /// Scale factor in [0, 1] at time `tau` into a segment of length `duration`.
  double scale(double tau, double duration) const;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

struct Quadratures {
  double x = 0.0;  // in-phase amplitude (cos carrier)
  double y = 0.0;  // quadrature amplitude (sin carrier)

  bool is_zero() const { return x == 0.0 && y == 0.0; }
  friend bool operator==(const Quadratures&, const Quadratures&) = default;
};

struct Flip {
  double t = 0.0;  // absolute time
  int qubit = 2;

  friend bool operator==(const Flip&, const Flip&) = default;
};

struct PulseSegment {
  double start = 0.0;
  double duration = 0.0;
  Quadratures q1;
  Quadratures q2;
  Envelope envelope;
  std::optional<Flip> flip;
  std::string label;

  double end() const { return start + duration; }
  const Quadratures& amps(int qubit) const { return qubit == 1 ? q1 : q2; }
  Quadratures& amps(int qubit) { return qubit == 1 ? q1 : q2; }
  bool drives(int qubit) const { return !amps(qubit).is_zero(); }
  bool is_two_qubit() const { return drives(1) && drives(2); }
  bool contains(double t) const { return t >= start && t < end(); }

  /// Envelope-scaled, flip-adjusted amplitudes at absolute time t, assuming t
  /// lies in [start, end]. `after_flip` decides the side exactly at a flip.
  Quadratures amplitudes_at(int qubit, double t, bool after_flip) const;

  friend bool operator==(const PulseSegment&, const PulseSegment&) = default;
};

struct VirtualZ {
  int qubit = 1;
  double angle = 0.0;  // applies exp(i angle sz_q / 2) in the rotating frame
  double t = 0.0;

  friend bool operator==(const VirtualZ&, const VirtualZ&) = default;
};

struct PulseSequence {
  std::vector<PulseSegment> segments;
  std::vector<VirtualZ> virtual_z;
  /// Explicit end time; when absent, the latest segment end or ledger time.
  std::optional<double> total_time_override;
  /// Intended rotation word, when the sequence came from the compiler.
  std::optional<RotationWord> target;

  double total_time() const;
  /// Keeps segments sorted by start (stable) and the ledger sorted by time.
  void sort();

  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;
};

/// Pauli coefficients of H(t) (H = sum_k h[k] P_k). Segments are half-open
/// intervals [start, end).
PauliVector hamiltonian_at(const SystemParams& p, const PulseSequence& seq, double t);

/// Coefficients for given drive amplitudes at time t.
PauliVector hamiltonian_with_drives(const SystemParams& p, const Quadratures& q1,
                                    const Quadratures& q2, double t);

/// m * 2 pi / delta.
double sync_time(const SystemParams& p, int m);

/// True when t is an integer multiple of t0_sync within 1e-9 relative.
bool on_sync_grid(const SystemParams& p, double t);
/// Smallest grid time >= t (within the on-grid tolerance).
double next_sync_time(const SystemParams& p, double t);

enum class DiagnosticKind { kOffGrid, kOverlap, kCouplingRatio, kFlipOutside };

struct Diagnostic {
  DiagnosticKind kind;
  bool is_violation;  // warnings are reported but do not fail a sequence
  std::string message;
};

std::vector<Diagnostic> validate_sequence(const SystemParams& p, const PulseSequence& seq);
bool has_violations(const std::vector<Diagnostic>& diagnostics);

}  // namespace flicforq

#endif  // FLICFORQ_MODEL_HPP_
