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

#include "flicforq/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "flicforq/error.hpp"
#include "flicforq/pauli.hpp"

namespace flicforq {

namespace {

constexpr double kPointRelTol = 1e-9;

double point_eps(double t) { return kPointRelTol * std::max(1.0, std::abs(t)); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

const std::array<Mat4cd, 16>& pauli_table() {
  static const std::array<Mat4cd, 16> table = [] {
    std::array<Mat4cd, 16> t;
    for (int k = 0; k < 16; ++k) t[k] = to_matrix(PauliString::from_index(k));
    return t;
  }();
  return table;
}

Mat4cd hamiltonian_matrix(const PauliVector& h) {
  const auto& table = pauli_table();
  Mat4cd m = Mat4cd::Zero();
  for (int k = 0; k < 16; ++k)
    if (h[k] != 0.0) m += h[k] * table[k];
  return m;
}

// Drives are constant in structure between consecutive breakpoints, so which
// segments are on and which side of a flip we are on is decided once per
// interval from its midpoint.
struct ActiveSegment {
  const PulseSegment* segment;
  bool flipped;
};

std::vector<ActiveSegment> active_segments(const PulseSequence& seq, double mid) {
  std::vector<ActiveSegment> out;
  for (const auto& s : seq.segments)
    if (s.contains(mid)) out.push_back({&s, s.flip.has_value() && mid > s.flip->t});
  return out;
}

PauliVector hamiltonian_on(const SystemParams& p, const std::vector<ActiveSegment>& active,
                           double t) {
  Quadratures d[2];
  for (const auto& a : active) {
    const auto& s = *a.segment;
    const double scale = s.envelope.scale(t - s.start, s.duration);
    for (int q = 1; q <= 2; ++q) {
      const double sign = (a.flipped && s.flip->qubit == q) ? -1.0 : 1.0;
      d[q - 1].x += sign * scale * s.amps(q).x;
      d[q - 1].y += sign * scale * s.amps(q).y;
    }
  }
  return hamiltonian_with_drives(p, d[0], d[1], t);
}

Vector15 derivative(const PauliVector& h, const Vector15& c) {
  Vector15 out = Vector15::Zero();
  for (const auto& term : structure_constants())
    if (h[term.beta] != 0.0) out[term.out] += term.coef * h[term.beta] * c[term.in];
  return out;
}

Vector15 rk4_step(const SystemParams& p, const std::vector<ActiveSegment>& active,
                  const Vector15& c, double t, double h) {
  const auto h0 = hamiltonian_on(p, active, t);
  const auto hm = hamiltonian_on(p, active, t + 0.5 * h);
  const auto h1 = hamiltonian_on(p, active, t + h);
  const Vector15 k1 = derivative(h0, c);
  const Vector15 k2 = derivative(hm, c + 0.5 * h * k1);
  const Vector15 k3 = derivative(hm, c + 0.5 * h * k2);
  const Vector15 k4 = derivative(h1, c + h * k3);
  return c + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Fourth-order Magnus step with two Gauss-Legendre nodes, exponentiated
// exactly: U = exp(-i K), K = h/2 (H1 + H2) + i sqrt(3)/12 h^2 [H1, H2].
Mat4cd magnus_step(const SystemParams& p, const std::vector<ActiveSegment>& active, double t,
                   double h) {
  static const double c = std::sqrt(3.0) / 6.0;
  const Mat4cd h1 = hamiltonian_matrix(hamiltonian_on(p, active, t + (0.5 - c) * h));
  const Mat4cd h2 = hamiltonian_matrix(hamiltonian_on(p, active, t + (0.5 + c) * h));
  Mat4cd k = (0.5 * h) * (h1 + h2);
  k += std::complex<double>(0.0, std::sqrt(3.0) / 12.0 * h * h) * (h1 * h2 - h2 * h1);
  Eigen::SelfAdjointEigenSolver<Mat4cd> es(k);
  Eigen::Matrix<std::complex<double>, 4, 1> phases;
  for (int i = 0; i < 4; ++i) phases[i] = std::polar(1.0, -es.eigenvalues()[i]);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double max_step(const SystemParams& p, int steps_per_period) {
  if (steps_per_period < 1) throw Error("steps_per_period must be positive");
  return 2.0 * kPi / std::max(p.w1z, p.w2z) / steps_per_period;
}

int step_count(double length, double h_max) {
  return std::max(1, static_cast<int>(std::ceil(length / h_max - 1e-9)));
}

double resolve_interval(const SystemParams& p, double requested) {
  return requested > 0.0 ? requested : p.t0_sync() / 8.0;
}

Mat4cd ledger_rotation(const VirtualZ& z) {
  const std::complex<double> i(0.0, 1.0);
  Mat4cd m = Mat4cd::Zero();
  for (int k = 0; k < 4; ++k) {
    const int bit = z.qubit == 1 ? (k >> 1) & 1 : k & 1;
    const double s = bit == 0 ? 1.0 : -1.0;
    m(k, k) = std::exp(i * (0.5 * z.angle * s));
  }
  return m;
}

Mat4cd propagate(const SystemParams& p, const PulseSequence& seq, const StepPolicy& policy,
                 bool with_ledger) {
  validate(p);
  const auto pts = breakpoints(p, seq, resolve_interval(p, policy.sample_interval));
  const double h_max = max_step(p, policy.steps_per_period);
  Mat4cd u = Mat4cd::Identity();
  auto apply_ledger_at = [&](double t) {
    if (!with_ledger) return;
    for (const auto& z : seq.virtual_z)
      if (std::abs(z.t - t) <= point_eps(t)) u = ledger_rotation(z) * u;
  };
  apply_ledger_at(0.0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const auto active = active_segments(seq, 0.5 * (a + b));
    const int n = step_count(b - a, h_max);
    const double h = (b - a) / n;
    for (int k = 0; k < n; ++k) u = magnus_step(p, active, a + k * h, h) * u;
    apply_ledger_at(b);
  }
  const double defect = (u.adjoint() * u - Mat4cd::Identity()).cwiseAbs().maxCoeff();
  if (defect > 1e-9) throw StepTooCoarse("unitarity defect " + sci(defect));
  return u;
}

std::vector<DensityState> oracle_run(const SystemParams& p, const PulseSequence& seq,
                                     const DensityState& rho0, const std::vector<double>& pts,
                                     int substeps_per_period) {
  const double h_max = max_step(p, substeps_per_period);
  std::vector<DensityState> out{rho0};
  Mat4cd rho = rho0.matrix();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const auto active = active_segments(seq, 0.5 * (a + b));
    const int n = step_count(b - a, h_max);
    const double h = (b - a) / n;
    Mat4cd u = Mat4cd::Identity();
    for (int k = 0; k < n; ++k) u = magnus_step(p, active, a + k * h, h) * u;
    rho = u * rho * u.adjoint();
    out.push_back(DensityState::from_matrix(rho));
  }
  return out;
}

}  // namespace

DensityState DensityState::from_matrix(const Mat4cd& rho) {
  const auto& table = pauli_table();
  DensityState s;
  for (int k = 1; k < 16; ++k) s.c[slot_of(k)] = (table[k] * rho).trace().real();
  return s;
}

DensityState DensityState::from_ket(const Ket4cd& psi) {
  return from_matrix(psi * psi.adjoint());
}

DensityState DensityState::product(const Vector3d& bloch1, const Vector3d& bloch2) {
  DensityState s;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      const double v1 = a == 0 ? 1.0 : bloch1[a - 1];
      const double v2 = b == 0 ? 1.0 : bloch2[b - 1];
      s.c[slot_of(4 * a + b)] = v1 * v2;
    }
  return s;
}

DensityState DensityState::basis(int q1_bit, int q2_bit) {
  return product(Vector3d(0, 0, q1_bit ? -1.0 : 1.0), Vector3d(0, 0, q2_bit ? -1.0 : 1.0));
}

Mat4cd DensityState::matrix() const {
  const auto& table = pauli_table();
  Mat4cd m = Mat4cd::Identity();
  for (int k = 1; k < 16; ++k) m += c[slot_of(k)] * table[k];
  return 0.25 * m;
}

double trace_distance(const DensityState& a, const DensityState& b) {
  DensityState diff;
  diff.c = a.c - b.c;
  Mat4cd m = diff.matrix() - 0.25 * Mat4cd::Identity();
  Eigen::SelfAdjointEigenSolver<Mat4cd> es(m, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

const std::vector<StructureTerm>& structure_constants() {
  // dc_d/dt = -2i eps H_b c_g for every anticommuting pair P_b P_g = eps P_d.
  static const std::vector<StructureTerm> terms = [] {
    std::vector<StructureTerm> out;
    for (int beta = 1; beta < 16; ++beta)
      for (int gamma = 1; gamma < 16; ++gamma) {
        const auto pb = PauliString::from_index(beta);
        const auto pg = PauliString::from_index(gamma);
        if (commutes(pb, pg)) continue;
        const auto prod = pb * pg;
        const double coef = prod.phase == 1 ? 2.0 : -2.0;
        out.push_back({slot_of(prod.index()), beta, slot_of(gamma), coef});
      }
    return out;
  }();
  return terms;
}

Matrix15 liouvillian(const PauliVector& h) {
  Matrix15 m = Matrix15::Zero();
  for (const auto& term : structure_constants()) m(term.out, term.in) += term.coef * h[term.beta];
  return m;
}

std::vector<double> breakpoints(const SystemParams& p, const PulseSequence& seq,
                                double sample_interval) {
  const double total = seq.total_time();
  std::vector<double> pts{0.0, total};
  auto add = [&](double t) {
    if (t > 0.0 && t < total) pts.push_back(t);
  };
  for (const auto& s : seq.segments) {
    add(s.start);
    add(s.end());
    if (s.flip) add(s.flip->t);
    if (s.envelope.kind == EnvelopeKind::kRaisedCosine && s.envelope.rise > 0.0) {
      const double r = std::min(s.envelope.rise, 0.5 * s.duration);
      add(s.start + r);
      add(s.end() - r);
    }
  }
  for (const auto& z : seq.virtual_z) add(z.t);
  if (sample_interval > 0.0)
    for (int k = 1; k * sample_interval < total; ++k) add(k * sample_interval);
  (void)p;
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double t : pts)
    if (out.empty() || t - out.back() > point_eps(t)) out.push_back(t);
  if (out.size() > 1 && std::abs(out.back() - total) > 0.0) out.back() = total;
  return out;
}

Trajectory evolve(const SystemParams& p, const PulseSequence& seq, const DensityState& rho0,
                  const StepPolicy& policy) {
  validate(p);
  const auto pts = breakpoints(p, seq, resolve_interval(p, policy.sample_interval));
  const double h_max = max_step(p, policy.steps_per_period);
  Trajectory traj;
  traj.frame = Frame::kLab;
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);
  Vector15 c = rho0.c;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const auto active = active_segments(seq, 0.5 * (a + b));
    const int n = step_count(b - a, h_max);
    const double h = (b - a) / n;
    for (int k = 0; k < n; ++k) {
      const double t = a + k * h;
      Vector15 next = rk4_step(p, active, c, t, h);
      if (policy.richardson_check) {
        const Vector15 half = rk4_step(p, active, rk4_step(p, active, c, t, 0.5 * h), t + 0.5 * h, 0.5 * h);
        const double err = (next - half).cwiseAbs().maxCoeff() / 15.0;
        if (err > 1e-8 * h)
          throw StepTooCoarse("local error " + sci(err) + " over step " + sci(h) +
                              " at t = " + sci(t));
      }
      c = next;
    }
    traj.times.push_back(b);
    traj.states.push_back(DensityState{c});
  }
  return traj;
}

Trajectory evolve_oracle(const SystemParams& p, const PulseSequence& seq,
                         const DensityState& rho0, const OraclePolicy& policy) {
  validate(p);
  const auto pts = breakpoints(p, seq, resolve_interval(p, policy.sample_interval));
  int substeps = std::max(1, policy.substeps_per_period);
  auto previous = oracle_run(p, seq, rho0, pts, substeps);
  for (int d = 0; d < policy.max_doublings; ++d) {
    substeps *= 2;
    auto current = oracle_run(p, seq, rho0, pts, substeps);
    double worst = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i)
      worst = std::max(worst, trace_distance(current[i], previous[i]));
    previous = std::move(current);
    if (worst < policy.tolerance) {
      Trajectory traj;
      traj.times = pts;
      traj.states = std::move(previous);
      return traj;
    }
  }
  throw NoConvergence("oracle did not reach trace distance " + sci(policy.tolerance) +
                      " after " + std::to_string(policy.max_doublings) + " doublings");
}

Mat4cd propagator_of_sequence(const SystemParams& p, const PulseSequence& seq,
                              const StepPolicy& policy) {
  return propagate(p, seq, policy, false);
}

Mat4cd rotating_frame_unitary(const SystemParams& p, const PulseSequence& seq,
                              const StepPolicy& policy) {
  return frame_rotation(p, seq.total_time()) * propagate(p, seq, policy, true);
}

Mat4cd frame_rotation(const SystemParams& p, double t) {
  const std::complex<double> i(0.0, 1.0);
  Mat4cd v = Mat4cd::Zero();
  for (int k = 0; k < 4; ++k) {
    const double s1 = ((k >> 1) & 1) ? -1.0 : 1.0;
    const double s2 = (k & 1) ? -1.0 : 1.0;
    v(k, k) = std::exp(i * (0.5 * t * (s1 * p.w1z + s2 * p.w2z)));
  }
  return v;
}

DensityState to_rotating_frame(const DensityState& lab, const SystemParams& p, double t,
                               Frame frame) {
  if (frame != Frame::kLab) throw WrongFrame("state is already in the rotating frame");
  const Mat4cd v = frame_rotation(p, t);
  return DensityState::from_matrix(v * lab.matrix() * v.adjoint());
}

Trajectory to_rotating_frame(const Trajectory& lab, const SystemParams& p) {
  if (lab.frame != Frame::kLab) throw WrongFrame("trajectory is already in the rotating frame");
  Trajectory out;
  out.frame = Frame::kRotating;
  out.times = lab.times;
  out.states.reserve(lab.states.size());
  for (std::size_t i = 0; i < lab.states.size(); ++i)
    out.states.push_back(to_rotating_frame(lab.states[i], p, lab.times[i]));
  return out;
}

Trajectory apply_virtual_z(const Trajectory& rotating, const PulseSequence& seq) {
  if (rotating.frame != Frame::kRotating)
    throw WrongFrame("virtual-Z entries act in the rotating frame");
  Trajectory out = rotating;
  for (std::size_t i = 0; i < out.times.size(); ++i) {
    const double t = out.times[i];
    Mat4cd z = Mat4cd::Identity();
    for (const auto& entry : seq.virtual_z)
      if (entry.t <= t + point_eps(t)) z = ledger_rotation(entry) * z;
    if (!z.isIdentity())
      out.states[i] = DensityState::from_matrix(z * out.states[i].matrix() * z.adjoint());
  }
  return out;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, bool full) {
  static constexpr const char* kSingle[6] = {"cx1", "cy1", "cz1", "cx2", "cy2", "cz2"};
  static constexpr int kSingleIndex[6] = {4, 8, 12, 1, 2, 3};
  out << "t,frame";
  for (const char* name : kSingle) out << ',' << name;
  if (full)
    for (const char* a : {"x", "y", "z"})
      for (const char* b : {"x", "y", "z"}) out << ",c_" << a << b;
  out << '\n';
  const char* frame = traj.frame == Frame::kLab ? "lab" : "rotating";
  char buf[32];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
  };
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto& c = traj.states[i].c;
    out << num(traj.times[i]) << ',' << frame;
    for (int k : kSingleIndex) out << ',' << num(c[slot_of(k)]);
    if (full)
      for (int a = 1; a < 4; ++a)
        for (int b = 1; b < 4; ++b) out << ',' << num(c[slot_of(4 * a + b)]);
    out << '\n';
  }
}

}  // namespace flicforq
