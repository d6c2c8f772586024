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

#include "flicforq/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flicforq/error.hpp"

namespace flicforq {

namespace {

constexpr double kGridRelTol = 1e-9;

constexpr int kXI = 4 * 1 + 0;
constexpr int kIX = 4 * 0 + 1;
constexpr int kZI = 4 * 3 + 0;
constexpr int kIZ = 4 * 0 + 3;
constexpr int kXX = 4 * 1 + 1;

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

}  // namespace

void validate(const SystemParams& p) {
  if (!(p.w1z > 0.0) || !(p.w2z > 0.0))
    throw InvalidParams("Larmor frequencies must be positive");
  if (!(p.delta() > 0.0)) throw InvalidParams("qubit 1 must be the higher-frequency qubit (delta > 0)");
  if (!(p.wxx >= 0.0)) throw InvalidParams("wxx must be non-negative");
  if (p.wxx > 0.5 * p.delta())
    throw InvalidParams("wxx = " + fmt(p.wxx) + " exceeds delta/2 = " + fmt(0.5 * p.delta()));
}

double Envelope::scale(double tau, double duration) const {
  if (kind == EnvelopeKind::kSquare || rise <= 0.0) return 1.0;
  const double r = std::min(rise, 0.5 * duration);
  const double edge = std::min(tau, duration - tau);
  if (edge >= r) return 1.0;
  if (edge <= 0.0) return 0.0;
  return 0.5 * (1.0 - std::cos(kPi * edge / r));
}

Quadratures PulseSegment::amplitudes_at(int qubit, double t, bool after_flip) const {
  const double s = envelope.scale(t - start, duration);
  Quadratures a = amps(qubit);
  a.x *= s;
  a.y *= s;
  if (flip && flip->qubit == qubit && (t > flip->t || (t == flip->t && after_flip))) {
    a.x = -a.x;
    a.y = -a.y;
  }
  return a;
}

double PulseSequence::total_time() const {
  if (total_time_override) return *total_time_override;
  double t = 0.0;
  for (const auto& s : segments) t = std::max(t, s.end());
  for (const auto& z : virtual_z) t = std::max(t, z.t);
  return t;
}

void PulseSequence::sort() {
  std::stable_sort(segments.begin(), segments.end(),
                   [](const auto& a, const auto& b) { return a.start < b.start; });
  std::stable_sort(virtual_z.begin(), virtual_z.end(),
                   [](const auto& a, const auto& b) { return a.t < b.t; });
}

PauliVector hamiltonian_with_drives(const SystemParams& p, const Quadratures& q1,
                                    const Quadratures& q2, double t) {
  PauliVector h = PauliVector::Zero();
  h[kZI] = 0.5 * p.w1z;
  h[kIZ] = 0.5 * p.w2z;
  h[kXX] = 0.5 * p.wxx;
  h[kXI] = q1.x * std::cos(p.w1z * t) + q1.y * std::sin(p.w1z * t);
  h[kIX] = q2.x * std::cos(p.w2z * t) + q2.y * std::sin(p.w2z * t);
  return h;
}

PauliVector hamiltonian_at(const SystemParams& p, const PulseSequence& seq, double t) {
  Quadratures d[2];
  for (const auto& s : seq.segments) {
    if (!s.contains(t)) continue;
    for (int q = 1; q <= 2; ++q) {
      const auto a = s.amplitudes_at(q, t, true);
      d[q - 1].x += a.x;
      d[q - 1].y += a.y;
    }
  }
  return hamiltonian_with_drives(p, d[0], d[1], t);
}

double sync_time(const SystemParams& p, int m) { return m * p.t0_sync(); }

bool on_sync_grid(const SystemParams& p, double t) {
  const double m = t / p.t0_sync();
  return std::abs(m - std::round(m)) <= kGridRelTol * std::max(1.0, std::abs(m));
}

double next_sync_time(const SystemParams& p, double t) {
  if (on_sync_grid(p, t)) return std::round(t / p.t0_sync()) * p.t0_sync();
  return std::ceil(t / p.t0_sync()) * p.t0_sync();
}

std::vector<Diagnostic> validate_sequence(const SystemParams& p, const PulseSequence& seq) {
  std::vector<Diagnostic> out;
  const double ratio = p.wxx / p.delta();
  if (ratio > 0.5)
    out.push_back({DiagnosticKind::kCouplingRatio, true,
                   "wxx/delta = " + fmt(ratio) + " exceeds 0.5"});
  else if (ratio > 0.2)
    out.push_back({DiagnosticKind::kCouplingRatio, false,
                   "wxx/delta = " + fmt(ratio) + " is above 0.2; idle entanglement will be visible"});

  for (std::size_t i = 0; i < seq.segments.size(); ++i) {
    const auto& s = seq.segments[i];
    if (s.is_two_qubit() && !on_sync_grid(p, s.start))
      out.push_back({DiagnosticKind::kOffGrid, true,
                     "two-qubit segment " + std::to_string(i) + " starts at " + fmt(s.start) +
                         ", off the sync grid (t0_sync = " + fmt(p.t0_sync()) + ")"});
    if (s.flip && !(s.flip->t > s.start && s.flip->t < s.end()))
      out.push_back({DiagnosticKind::kFlipOutside, true,
                     "segment " + std::to_string(i) + " flips outside its open interval"});
    for (std::size_t j = i + 1; j < seq.segments.size(); ++j) {
      const auto& o = seq.segments[j];
      const double eps = kGridRelTol * std::max({1.0, s.end(), o.end()});
      const bool overlap = s.start < o.end() - eps && o.start < s.end() - eps;
      if (!overlap) continue;
      for (int q = 1; q <= 2; ++q)
        if (s.drives(q) && o.drives(q))
          out.push_back({DiagnosticKind::kOverlap, true,
                         "segments " + std::to_string(i) + " and " + std::to_string(j) +
                             " both drive qubit " + std::to_string(q)});
    }
  }
  return out;
}

bool has_violations(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_violation; });
}

}  // namespace flicforq
