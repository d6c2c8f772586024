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

#include <gtest/gtest.h>

#include "flicforq/analysis.hpp"
#include "flicforq/compiler.hpp"
#include "flicforq/integrator.hpp"

namespace flicforq {
namespace {

const SystemParams kDefault;

TEST(CompileOneQubit, HalfPiOnQubitOne) {
  const auto s = compile_one_qubit(kDefault, 1, Axis::kY, kPi / 2, 0.0);
  EXPECT_NEAR(s.duration, 125.6637, 1e-4);
  EXPECT_NEAR(s.q1.y, 0.0125, 1e-15);
  EXPECT_EQ(s.q1.x, 0.0);
  EXPECT_FALSE(s.drives(2));
}

TEST(CompileOneQubit, ZeroAngleIsPlaceholder) {
  const auto s = compile_one_qubit(kDefault, 1, Axis::kX, 0.0, 0.0);
  EXPECT_NEAR(s.duration, 125.6637, 1e-4);
  EXPECT_FALSE(s.drives(1));
  EXPECT_FALSE(s.drives(2));
}

TEST(CompileOneQubit, QuarterPiHalvesAmplitude) {
  const ChannelCalibration cal;
  const auto s = compile_one_qubit(kDefault, 2, Axis::kX, kPi / 4, 2 * kDefault.t0_sync(), cal);
  EXPECT_NEAR(std::abs(s.q2.x), 0.00625, 1e-15);
  EXPECT_EQ(std::signbit(s.q2.x), cal.x_sign < 0);
  EXPECT_NEAR(s.duration, 125.6637, 1e-4);
}

TEST(CompileOneQubit, Errors) {
  EXPECT_THROW(compile_one_qubit(kDefault, 1, Axis::kX, kPi / 2 + 1e-6, 0.0), AngleOutOfRange);
  EXPECT_THROW(compile_one_qubit(kDefault, 1, Axis::kX, kPi / 2, 1.0), OffGridStart);
}

TEST(CompileD, Shape) {
  const auto seq = compile_D(kDefault, 0.0);
  ASSERT_EQ(seq.segments.size(), 1u);
  const auto& s = seq.segments[0];
  EXPECT_NEAR(s.duration, 1256.637, 1e-3);
  EXPECT_NEAR(s.duration / kDefault.t0_sync(), 20.0, 1e-12);
  EXPECT_NEAR(s.q1.y, 0.05, 1e-15);
  EXPECT_NEAR(s.q2.y, 0.05, 1e-15);
  EXPECT_EQ(s.q1.x, 0.0);
  EXPECT_FALSE(s.flip.has_value());
  EXPECT_THROW(compile_D(kDefault, 1.0), OffGridStart);
  EXPECT_THROW(compile_D({1.05, 0.95, 0.0}, 0.0), InvalidParams);
}

TEST(CompileXXHalf, FlipAtMidpointOnGrid) {
  const auto seq = compile_xx_half(kDefault, 0.0);
  const auto& s = seq.segments.at(0);
  ASSERT_TRUE(s.flip.has_value());
  EXPECT_NEAR(s.flip->t, 628.319, 1e-3);
  EXPECT_EQ(s.flip->qubit, 2);
  EXPECT_NEAR(s.end(), 1256.637, 1e-3);
  EXPECT_TRUE(on_sync_grid(kDefault, s.flip->t));
  EXPECT_NEAR(s.flip->t / kDefault.t0_sync(), 10.0, 1e-12);
}

TEST(CompileXXHalf, HalvesDifferOnExactlyOneQubit) {
  const auto seq = compile_xx_half(kDefault, 0.0);
  const auto& s = seq.segments.at(0);
  const double before = 0.25 * s.duration, after = 0.75 * s.duration;
  for (int q = 1; q <= 2; ++q) {
    const auto a = s.amplitudes_at(q, before, false);
    const auto b = s.amplitudes_at(q, after, false);
    if (q == 2) {
      EXPECT_EQ(b.y, -a.y);
    } else {
      EXPECT_EQ(b.y, a.y);
    }
  }
}

TEST(CompileCnot, Structure) {
  const auto seq = compile_cnot(kDefault);
  ASSERT_EQ(seq.segments.size(), 4u);
  ASSERT_EQ(seq.virtual_z.size(), 1u);
  const double t_cnot = 3 * (4 * kPi / kDefault.delta()) + 4 * kPi / kDefault.wxx;
  EXPECT_NEAR(seq.total_time(), t_cnot, 1e-9);
  EXPECT_NEAR(seq.total_time(), 1633.628, 1e-3);
  EXPECT_EQ(seq.virtual_z[0].qubit, 1);
  EXPECT_DOUBLE_EQ(seq.virtual_z[0].angle, kPi / 2);
  EXPECT_NEAR(seq.virtual_z[0].t, t_cnot, 1e-9);
  ASSERT_TRUE(seq.target.has_value());
  EXPECT_EQ(*seq.target, build_cnot_word());
  for (const auto& s : seq.segments) {
    EXPECT_TRUE(on_sync_grid(kDefault, s.start));
    if (s.is_two_qubit())
      EXPECT_NEAR(s.duration / kDefault.t0_sync(), 2 * kDefault.delta() / kDefault.wxx, 1e-12);
    else
      EXPECT_NEAR(s.duration / kDefault.t0_sync(), 2.0, 1e-12);
  }
  EXPECT_TRUE(seq.segments[0].drives(2) && !seq.segments[0].drives(1));
  EXPECT_TRUE(seq.segments[2].is_two_qubit());
  EXPECT_TRUE(validate_sequence(kDefault, seq).empty());
}

TEST(CompileCnot, SignsFollowCalibration) {
  const ChannelCalibration plus{1.0, 1.0, 1.0};
  const auto seq = compile_cnot(kDefault, plus);
  EXPECT_GT(seq.segments[0].q2.x, 0.0);
  EXPECT_GT(seq.segments[1].q1.y, 0.0);
  EXPECT_LT(seq.segments[3].q1.y, 0.0);
  const auto def = compile_cnot(kDefault);
  EXPECT_LT(def.segments[0].q2.x, 0.0);
  EXPECT_LT(def.segments[1].q1.y, 0.0);
  EXPECT_GT(def.segments[3].q1.y, 0.0);
}

TEST(CompileCnot, IdealChannelWordEqualsCnot) {
  // The physically realized word for the default calibration.
  const RotationWord realized = parse_word("X2^1/2 Y1^-1/2 X1X2^-1/2 Y1^1/2 Z1^1/2");
  EXPECT_TRUE(equal_up_to_global_phase(word_unitary(realized), cnot_matrix(), 1e-12));
}

TEST(Calibration, DefaultMatchesSimulation) {
  EXPECT_EQ(calibrate_channels(kDefault), ChannelCalibration{});
}

TEST(CompiledSequences, AllValidate) {
  const ChannelCalibration cal;
  for (const auto& seq :
       {compile_D(kDefault, 0.0), compile_xx_half(kDefault, 0.0), compile_cnot(kDefault),
        compile_single(kDefault, 1, Axis::kX, kPi / 2, cal),
        compile_single(kDefault, 2, Axis::kY, kPi / 2, cal),
        insert_decoupling(kDefault, compile_cnot(kDefault), 1, cal)})
    EXPECT_TRUE(validate_sequence(kDefault, seq).empty());
}

TEST(Decoupling, AddsTwoEchoPulsesOnIdleQubit) {
  const auto base = compile_cnot(kDefault);
  const auto seq = insert_decoupling(kDefault, base, 1);
  ASSERT_EQ(seq.segments.size(), base.segments.size() + 3);
  int echoes = 0;
  for (const auto& s : seq.segments)
    if (s.label == "echo") {
      ++echoes;
      EXPECT_TRUE(s.drives(2));
      EXPECT_FALSE(s.drives(1));
      EXPECT_DOUBLE_EQ(std::abs(s.q2.y), kDefault.delta() / 4);
      EXPECT_NEAR(s.duration, 4 * kPi / kDefault.delta(), 1e-12);
    }
  EXPECT_EQ(echoes, 2);
  EXPECT_NEAR(seq.total_time() - base.total_time(), 2 * (4 * kPi / kDefault.delta()), 1e-9);
  EXPECT_NEAR(seq.virtual_z[0].t, seq.total_time(), 1e-9);
}

TEST(Decoupling, RoundTrip) {
  const auto base = compile_cnot(kDefault);
  const auto back = remove_decoupling(kDefault, insert_decoupling(kDefault, base, 1), 1);
  ASSERT_EQ(back.segments.size(), base.segments.size());
  for (std::size_t i = 0; i < base.segments.size(); ++i) {
    const auto& a = base.segments[i];
    const auto& b = back.segments[i];
    EXPECT_NEAR(a.start, b.start, 1e-9);
    EXPECT_NEAR(a.duration, b.duration, 1e-9);
    EXPECT_EQ(a.q1, b.q1);
    EXPECT_EQ(a.q2, b.q2);
    EXPECT_EQ(a.label, b.label);
    EXPECT_EQ(a.flip.has_value(), b.flip.has_value());
    if (a.flip) EXPECT_NEAR(a.flip->t, b.flip->t, 1e-9);
  }
  EXPECT_NEAR(back.virtual_z[0].t, base.virtual_z[0].t, 1e-9);
}

TEST(Decoupling, RejectsTwoQubitSegment) {
  EXPECT_THROW(insert_decoupling(kDefault, compile_cnot(kDefault), 2), NotOneQubitSegment);
  EXPECT_THROW(remove_decoupling(kDefault, compile_cnot(kDefault), 0), NotOneQubitSegment);
}

TEST(VirtualZ, AppendsEntry) {
  const auto seq = virtual_z(PulseSequence{}, 2, 0.7, 3.0);
  ASSERT_EQ(seq.virtual_z.size(), 1u);
  EXPECT_EQ(seq.virtual_z[0], (VirtualZ{2, 0.7, 3.0}));
}

TEST(VirtualZ, EntriesAtSameTimeAdd) {
  const auto base = compile_single(kDefault, 1, Axis::kY, kPi / 2, {});
  const double t = base.total_time();
  const auto two = virtual_z(virtual_z(base, 1, 0.4, t), 1, 0.9, t);
  const auto one = virtual_z(base, 1, 1.3, t);
  EXPECT_LT((rotating_frame_unitary(kDefault, two) - rotating_frame_unitary(kDefault, one))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
  const auto zero = virtual_z(base, 1, 0.0, t);
  EXPECT_LT((rotating_frame_unitary(kDefault, zero) - rotating_frame_unitary(kDefault, base))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(ZWait, RelativePhase) {
  EXPECT_NEAR(z_wait_duration(kDefault, kPi / 2), kPi / 2 / 0.1, 1e-9);
  EXPECT_NEAR(z_wait_duration(kDefault, -kPi / 2), 1.5 * kPi / 0.1, 1e-9);
  EXPECT_EQ(z_wait_duration(kDefault, 0.0), 0.0);
}

}  // namespace
}  // namespace flicforq
