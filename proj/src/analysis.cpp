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

#include "flicforq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "flicforq/error.hpp"

namespace flicforq {

namespace {

using Phases = std::vector<double>;
using Objective = std::function<double(const Phases&)>;

// Maximizes f coordinate by coordinate. Along any one phase the objectives
// used here are A + B cos(x - x0), so a coarse scan followed by golden-section
// refinement of the best bracket finds the coordinate maximum.
Phases maximize_phases(const Objective& f, std::size_t n) {
  constexpr int kGrid = 16;
  constexpr double kTol = 1e-9;
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  Phases x(n, 0.0);
  double best = f(x);
  for (int sweep = 0; sweep < 100; ++sweep) {
    const double before = best;
    for (std::size_t k = 0; k < n; ++k) {
      auto at = [&](double v) {
        Phases y = x;
        y[k] = v;
        return f(y);
      };
      double center = x[k];
      double center_val = best;
      for (int g = 1; g < kGrid; ++g) {
        const double v = x[k] + 2.0 * kPi * g / kGrid;
        const double fv = at(v);
        if (fv > center_val) center_val = fv, center = v;
      }
      double a = center - 2.0 * kPi / kGrid;
      double b = center + 2.0 * kPi / kGrid;
      double c = b - kInvPhi * (b - a);
      double d = a + kInvPhi * (b - a);
      double fc = at(c);
      double fd = at(d);
      while (b - a > kTol) {
        if (fc > fd) {
          b = d, d = c, fd = fc;
          c = b - kInvPhi * (b - a);
          fc = at(c);
        } else {
          a = c, c = d, fc = fd;
          d = a + kInvPhi * (b - a);
          fd = at(d);
        }
      }
      const double v = 0.5 * (a + b);
      const double fv = at(v);
      if (fv >= center_val) center = v, center_val = fv;
      if (center_val >= best) {
        x[k] = std::remainder(center, 2.0 * kPi);
        best = center_val;
      }
    }
    if (best - before <= 1e-15) break;
  }
  return x;
}

double process_fidelity(const Mat4cd& u, const Mat4cd& ideal, const Phases& ph) {
  const Mat4cd m = ideal.adjoint() * local_z(ph[0], ph[1]) * u * local_z(ph[2], ph[3]);
  return std::norm(m.trace()) / 16.0;
}

using Mat3 = Eigen::Matrix3d;

Mat3 rz(double a) {
  Mat3 r;
  r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return r;
}

// SO(3) image of a 2x2 unitary.
Mat3 bloch_rotation(const Mat2cd& u) {
  const std::array<Mat2cd, 3> s = {pauli_matrix(Pauli::X), pauli_matrix(Pauli::Y),
                                   pauli_matrix(Pauli::Z)};
  Mat3 o;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) o(i, j) = 0.5 * (s[i] * u * s[j] * u.adjoint()).trace().real();
  return o;
}

// Linear part of the target qubit's reduced channel r -> M r + t.
Mat3 reduced_channel(const Mat4cd& u, int qubit, const Vector3d& spectator) {
  Mat3 m;
  for (int k = 0; k < 3; ++k) {
    Vector3d r = Vector3d::Zero();
    r[k] = 1.0;
    Vector3d out[2];
    for (int sgn = 0; sgn < 2; ++sgn) {
      const Vector3d in = sgn == 0 ? r : Vector3d(-r);
      const DensityState rho = qubit == 1 ? DensityState::product(in, spectator)
                                          : DensityState::product(spectator, in);
      out[sgn] = reduced_bloch(DensityState::from_matrix(u * rho.matrix() * u.adjoint()), qubit);
    }
    m.col(k) = 0.5 * (out[0] - out[1]);
  }
  return m;
}

struct OneQubitErrors {
  double aligned;
  double unaligned;
};

OneQubitErrors one_qubit_errors(const SystemParams& p, int qubit, Axis axis,
                                Spectator spectator, bool echo, const StepPolicy& policy) {
  const ChannelCalibration cal;
  PulseSequence seq = compile_single(p, qubit, axis, kPi / 2, cal);
  if (echo) seq = insert_decoupling(p, seq, 0, cal);
  const Mat4cd u = rotating_frame_unitary(p, seq, policy);
  const Vector3d partner = spectator == Spectator::kZero ? Vector3d(0, 0, 1) : Vector3d(1, 0, 0);
  const Mat3 m = reduced_channel(u, qubit, partner);
  const Mat2cd ideal = std::cos(kPi / 4) * Mat2cd::Identity() +
                       std::complex<double>(0, std::sin(kPi / 4)) *
                           pauli_matrix(axis == Axis::kX ? Pauli::X : Pauli::Y);
  const Mat3 o = bloch_rotation(ideal);
  // Average fidelity over the six Pauli eigenstates: 1/2 + Tr(O^T M) / 6.
  auto fidelity = [&](const Phases& ph) {
    return 0.5 + (o.transpose() * rz(ph[0]) * m * rz(ph[1])).trace() / 6.0;
  };
  const Phases zero(2, 0.0);
  const Phases best = maximize_phases(fidelity, 2);
  return {1.0 - fidelity(best), 1.0 - fidelity(zero)};
}

std::string describe(int qubit, Axis axis, Spectator s) {
  std::ostringstream os;
  os << (axis == Axis::kX ? "X" : "Y") << qubit << " spectator "
     << (s == Spectator::kZero ? "|0>" : "|+>");
  return os.str();
}

}  // namespace

Vector3d reduced_bloch(const DensityState& rho, int qubit) {
  if (qubit == 1)
    return {rho.c[slot_of(4)], rho.c[slot_of(8)], rho.c[slot_of(12)]};
  return {rho.c[slot_of(1)], rho.c[slot_of(2)], rho.c[slot_of(3)]};
}

double concurrence(const DensityState& rho, double tol) {
  const Mat4cd m = rho.matrix();
  Eigen::SelfAdjointEigenSolver<Mat4cd> es(m);
  if (es.eigenvalues().minCoeff() < -tol)
    throw NegativeEigenvalue("minimum eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
  const Eigen::Vector4d roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Mat4cd sqrt_rho = es.eigenvectors() * roots.cast<std::complex<double>>().asDiagonal() *
                          es.eigenvectors().adjoint();
  const Mat4cd yy = to_matrix(parse_axis("Y1Y2"));
  const Mat4cd flipped = yy * m.conjugate() * yy;
  const Mat4cd r = sqrt_rho * flipped * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Mat4cd> er(0.5 * (r + r.adjoint()), Eigen::EigenvaluesOnly);
  Eigen::Vector4d l = er.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(l.data(), l.data() + 4, std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double state_fidelity(const DensityState& rho, const Ket4cd& psi) {
  return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

Mat4cd local_z(double a, double b) {
  const std::complex<double> i(0.0, 1.0);
  Mat4cd m = Mat4cd::Zero();
  for (int k = 0; k < 4; ++k) {
    const double s1 = ((k >> 1) & 1) ? -1.0 : 1.0;
    const double s2 = (k & 1) ? -1.0 : 1.0;
    m(k, k) = std::exp(i * (0.5 * (a * s1 + b * s2)));
  }
  return m;
}

FidelityReport gate_fidelity(const Mat4cd& u_sim, const RotationWord& word, bool align_local_z) {
  return gate_fidelity(u_sim, word_unitary(word), align_local_z);
}

FidelityReport gate_fidelity(const Mat4cd& u_sim, const Mat4cd& u_ideal, bool align_local_z) {
  const double defect = (u_sim.adjoint() * u_sim - Mat4cd::Identity()).cwiseAbs().maxCoeff();
  if (defect > 1e-6) throw NotUnitary("defect " + std::to_string(defect));
  FidelityReport report;
  Phases ph(4, 0.0);
  const double unaligned = process_fidelity(u_sim, u_ideal, ph);
  if (align_local_z) {
    ph = maximize_phases([&](const Phases& x) { return process_fidelity(u_sim, u_ideal, x); }, 4);
    std::ostringstream os;
    os.precision(12);
    os << "unaligned process fidelity " << unaligned;
    report.notes.push_back(os.str());
  }
  report.process = process_fidelity(u_sim, u_ideal, ph);
  std::copy(ph.begin(), ph.end(), report.alignment.begin());
  const Mat4cd aligned = local_z(ph[0], ph[1]) * u_sim * local_z(ph[2], ph[3]);
  const Mat4cd m = u_ideal.adjoint() * aligned;
  static const char* kNames[4] = {"00", "01", "10", "11"};
  for (int j = 0; j < 4; ++j) report.per_state[kNames[j]] = std::norm(m(j, j));
  std::ostringstream os;
  os.precision(6);
  os << "residual 1 - F = " << 1.0 - report.process;
  report.notes.push_back(os.str());
  return report;
}

SidebandReport sideband_check(const SystemParams& p, double amp_y1, double amp_y2, double tol) {
  if (amp_y1 < 0.0 || amp_y2 < 0.0) throw Error("sideband amplitudes must be non-negative");
  SidebandReport r;
  r.q1_lower = p.w1z - amp_y1;
  r.q1_upper = p.w1z + amp_y1;
  r.q2_lower = p.w2z - amp_y2;
  r.q2_upper = p.w2z + amp_y2;
  r.gap = r.q1_lower - r.q2_upper;
  r.resonant = std::abs(r.gap) <= tol;
  return r;
}

double one_qubit_gate_error(const SystemParams& p, int qubit, Axis axis, Spectator spectator,
                            bool echo, bool align, const StepPolicy& policy) {
  const auto e = one_qubit_errors(p, qubit, axis, spectator, echo, policy);
  return align ? e.aligned : e.unaligned;
}

OneQubitBudget one_qubit_error_budget(const SystemParams& p, bool echo,
                                      const StepPolicy& policy) {
  validate(p);
  OneQubitBudget b;
  b.parasitic_argument = p.wxx * one_qubit_duration(p);
  b.parasitic_angle = std::abs(b.parasitic_argument) <= 1.0
                          ? std::acos(b.parasitic_argument)
                          : std::numeric_limits<double>::quiet_NaN();
  b.simulated_error = -1.0;
  b.unaligned_error = -1.0;
  for (int q : {1, 2})
    for (Axis a : {Axis::kX, Axis::kY})
      for (Spectator s : {Spectator::kZero, Spectator::kPlus}) {
        const auto e = one_qubit_errors(p, q, a, s, echo, policy);
        if (e.aligned > b.simulated_error) {
          b.simulated_error = e.aligned;
          b.worst_case = describe(q, a, s);
        }
        b.unaligned_error = std::max(b.unaligned_error, e.unaligned);
      }
  return b;
}

bool entanglement_flag(const DensityState& rho, double tol) {
  return reduced_bloch(rho, 1).norm() <= tol && reduced_bloch(rho, 2).norm() <= tol &&
         rho.purity() >= 1.0 - 2.0 * tol;
}

}  // namespace flicforq
