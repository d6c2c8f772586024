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

#include "flicforq/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flicforq/error.hpp"
#include "flicforq/integrator.hpp"

namespace flicforq {

namespace {

constexpr double kAngleSlack = 1e-12;

PauliString axis_string(int qubit, Axis axis) {
  std::string name = axis == Axis::kX ? "X" : "Y";
  name += qubit == 1 ? "1" : "2";
  return parse_axis(name);
}

void require_on_grid(const SystemParams& p, double start) {
  if (!on_sync_grid(p, start))
    throw OffGridStart("start " + std::to_string(start) + " is not a multiple of " +
                       std::to_string(p.t0_sync()));
}

double overlap_fidelity(const Mat4cd& u, const Mat4cd& ideal) {
  return std::norm((ideal.adjoint() * u).trace()) / 16.0;
}

// +1 when `u` is closer to P^(1/2) than to P^(-1/2).
double sign_of(const Mat4cd& u, const PauliString& axis) {
  const double plus = overlap_fidelity(u, rotation_unitary(Rotation{axis, 0.5}));
  const double minus = overlap_fidelity(u, rotation_unitary(Rotation{axis, -0.5}));
  return plus >= minus ? 1.0 : -1.0;
}

PulseSegment two_qubit_segment(const SystemParams& p, double start) {
  if (!(p.wxx > 0.0)) throw InvalidParams("two-qubit pulses need wxx > 0");
  require_on_grid(p, start);
  PulseSegment s;
  s.start = start;
  s.duration = two_qubit_duration(p);
  s.q1.y = 0.5 * p.delta();
  s.q2.y = 0.5 * p.delta();
  return s;
}

bool is_echo(const PulseSegment& s) { return s.label == "echo"; }

}  // namespace

double one_qubit_duration(const SystemParams& p) { return 4.0 * kPi / p.delta(); }

double two_qubit_duration(const SystemParams& p) { return 4.0 * kPi / p.wxx; }

ChannelCalibration calibrate_channels(const SystemParams& p) {
  validate(p);
  ChannelCalibration cal{1.0, 1.0, 1.0};
  for (Axis axis : {Axis::kX, Axis::kY}) {
    PulseSequence seq;
    seq.segments.push_back(compile_one_qubit(p, 1, axis, kPi / 2, 0.0, cal));
    const double s = sign_of(rotating_frame_unitary(p, seq), axis_string(1, axis));
    (axis == Axis::kX ? cal.x_sign : cal.y_sign) = s;
  }
  cal.xx_sign = sign_of(rotating_frame_unitary(p, compile_xx_half(p, 0.0)), parse_axis("X1X2"));
  return cal;
}

PulseSegment compile_one_qubit(const SystemParams& p, int qubit, Axis axis, double angle,
                               double start, const ChannelCalibration& cal) {
  validate(p);
  if (qubit != 1 && qubit != 2) throw Error("qubit must be 1 or 2");
  if (std::abs(angle) > kPi / 2 + kAngleSlack)
    throw AngleOutOfRange("|" + std::to_string(angle) + "| exceeds pi/2");
  require_on_grid(p, start);
  PulseSegment s;
  s.start = start;
  s.duration = one_qubit_duration(p);
  const double amp = cal.sign(axis) * (angle / (kPi / 2)) * p.delta() / 8.0;
  (axis == Axis::kX ? s.amps(qubit).x : s.amps(qubit).y) = amp;
  s.label = format_word({{axis_string(qubit, axis), angle / kPi}});
  return s;
}

PulseSequence compile_D(const SystemParams& p, double start) {
  validate(p);
  PulseSequence seq;
  seq.segments.push_back(two_qubit_segment(p, start));
  seq.segments.back().label = "D";
  seq.target = build_D();
  return seq;
}

PulseSequence compile_xx_half(const SystemParams& p, double start, int flip_qubit) {
  validate(p);
  if (flip_qubit != 1 && flip_qubit != 2) throw Error("flip qubit must be 1 or 2");
  PulseSequence seq;
  PulseSegment s = two_qubit_segment(p, start);
  s.flip = Flip{start + 2.0 * kPi / p.wxx, flip_qubit};
  s.label = "X1X2^1/2";
  seq.segments.push_back(s);
  seq.target = RotationWord{{parse_axis("X1X2"), 0.5}};
  return seq;
}

PulseSequence compile_cnot(const SystemParams& p, const ChannelCalibration& cal,
                           int flip_qubit) {
  validate(p);
  // With a negative two-qubit sign the word is conjugated by s1z, which turns
  // the qubit-1 y rotations around and leaves CNOT itself unchanged.
  const double y1 = cal.xx_sign < 0 ? -1.0 : 1.0;
  PulseSequence seq;
  double t = 0.0;
  auto one = [&](int qubit, Axis axis, double angle) {
    seq.segments.push_back(compile_one_qubit(p, qubit, axis, angle, t, cal));
    t = seq.segments.back().end();
  };
  one(2, Axis::kX, kPi / 2);
  one(1, Axis::kY, y1 * kPi / 2);
  t = next_sync_time(p, t);
  auto xx = compile_xx_half(p, t, flip_qubit);
  seq.segments.push_back(xx.segments.front());
  t = next_sync_time(p, seq.segments.back().end());
  one(1, Axis::kY, -y1 * kPi / 2);
  seq.virtual_z.push_back({1, kPi / 2, t});
  seq.target = build_cnot_word();
  return seq;
}

PulseSequence compile_single(const SystemParams& p, int qubit, Axis axis, double angle,
                             const ChannelCalibration& cal) {
  PulseSequence seq;
  seq.segments.push_back(compile_one_qubit(p, qubit, axis, angle, 0.0, cal));
  seq.target = RotationWord{{axis_string(qubit, axis), angle / kPi}};
  return seq;
}

PulseSequence insert_decoupling(const SystemParams& p, const PulseSequence& seq,
                                std::size_t index, const ChannelCalibration& cal) {
  validate(p);
  if (index >= seq.segments.size()) throw NotOneQubitSegment("no segment at that index");
  const PulseSegment host = seq.segments[index];
  if (host.drives(1) == host.drives(2) || host.flip)
    throw NotOneQubitSegment("segment " + std::to_string(index) + " is not a one-qubit pulse");
  const int idle = host.drives(1) ? 2 : 1;
  const double pulse = one_qubit_duration(p);
  const double shift = 2.0 * pulse;
  const double half = 0.5 * host.duration;
  const double host_end = host.end();

  PulseSequence out = seq;
  out.segments.clear();
  for (std::size_t i = 0; i < seq.segments.size(); ++i) {
    if (i == index) continue;
    PulseSegment s = seq.segments[i];
    if (s.start >= host_end - 1e-9 * std::max(1.0, host_end)) {
      s.start += shift;
      if (s.flip) s.flip->t += shift;
    }
    out.segments.push_back(s);
  }
  PulseSegment first = host;
  first.duration = half;
  PulseSegment echo;
  echo.duration = pulse;
  echo.amps(idle).y = cal.y_sign * p.delta() / 4.0;
  echo.label = "echo";
  echo.start = host.start + half;
  PulseSegment second = host;
  second.start = echo.start + pulse;
  second.duration = half;
  PulseSegment echo2 = echo;
  echo2.start = second.end();
  for (const auto& s : {first, echo, second, echo2}) out.segments.push_back(s);
  for (auto& z : out.virtual_z)
    if (z.t >= host_end - 1e-9 * std::max(1.0, host_end)) z.t += shift;
  if (out.total_time_override) *out.total_time_override += shift;
  out.sort();
  return out;
}

PulseSequence remove_decoupling(const SystemParams& p, const PulseSequence& seq,
                                std::size_t index) {
  validate(p);
  const auto& s = seq.segments;
  if (index + 3 >= s.size() || is_echo(s[index]) || !is_echo(s[index + 1]) ||
      is_echo(s[index + 2]) || !is_echo(s[index + 3]) || s[index].q1 != s[index + 2].q1 ||
      s[index].q2 != s[index + 2].q2)
    throw NotOneQubitSegment("no decoupled host at index " + std::to_string(index));
  const double pulse = one_qubit_duration(p);
  const double shift = 2.0 * pulse;
  const double host_end = s[index + 3].end();

  PulseSequence out = seq;
  out.segments.clear();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i >= index && i <= index + 3) continue;
    PulseSegment seg = s[i];
    if (seg.start >= host_end - 1e-9 * std::max(1.0, host_end)) {
      seg.start -= shift;
      if (seg.flip) seg.flip->t -= shift;
    }
    out.segments.push_back(seg);
  }
  PulseSegment host = s[index];
  host.duration = 2.0 * s[index].duration;
  out.segments.push_back(host);
  for (auto& z : out.virtual_z)
    if (z.t >= host_end - 1e-9 * std::max(1.0, host_end)) z.t -= shift;
  if (out.total_time_override) *out.total_time_override -= shift;
  out.sort();
  return out;
}

PulseSequence virtual_z(PulseSequence seq, int qubit, double angle, double t) {
  if (qubit != 1 && qubit != 2) throw Error("qubit must be 1 or 2");
  seq.virtual_z.push_back({qubit, angle, t});
  seq.sort();
  return seq;
}

double z_wait_duration(const SystemParams& p, double angle) {
  validate(p);
  double a = std::fmod(angle, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a / p.delta();
}

}  // namespace flicforq
