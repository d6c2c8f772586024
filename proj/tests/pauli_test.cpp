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

#include <random>

#include "flicforq/pauli.hpp"

namespace flicforq {
namespace {

const std::complex<double> kI(0.0, 1.0);

std::vector<PauliString> all_unit_strings() {
  std::vector<PauliString> out;
  for (int k = 0; k < 16; ++k) out.push_back(PauliString::from_index(k));
  return out;
}

std::vector<PauliString> all_strings() {
  std::vector<PauliString> out;
  for (std::uint8_t ph = 0; ph < 4; ++ph)
    for (int k = 0; k < 16; ++k) out.push_back(PauliString::from_index(k, ph));
  return out;
}

TEST(PauliMultiply, Examples) {
  EXPECT_EQ(parse_axis("X1") * parse_axis("Y1"), (PauliString{1, Pauli::Z, Pauli::I}));
  const PauliString zx{3, Pauli::Z, Pauli::X};
  EXPECT_EQ(PauliString{} * zx, zx);
  EXPECT_EQ(parse_axis("Z1Z2") * parse_axis("X1X2"), (PauliString{2, Pauli::Y, Pauli::Y}));
}

TEST(PauliMultiply, ExhaustiveAgainstMatrices) {
  for (const auto& a : all_strings())
    for (const auto& b : all_strings()) {
      const Mat4cd expected = to_matrix(a) * to_matrix(b);
      EXPECT_LT((to_matrix(a * b) - expected).cwiseAbs().maxCoeff(), 1e-15)
          << to_string(a) << " * " << to_string(b);
    }
}

TEST(PauliMultiply, Associative) {
  const auto s = all_unit_strings();
  for (const auto& a : s)
    for (const auto& b : s)
      for (const auto& c : s) EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(PauliMultiply, UnitStringsSquareToIdentity) {
  for (const auto& p : all_unit_strings()) EXPECT_EQ(p * p, PauliString{});
}

TEST(PauliCommutes, MatchesMatrixCommutator) {
  for (const auto& a : all_unit_strings())
    for (const auto& b : all_unit_strings()) {
      const Mat4cd ma = to_matrix(a), mb = to_matrix(b);
      EXPECT_EQ(commutes(a, b), (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST(WordUnitary, SingleXIsIX) {
  const Mat4cd u = word_unitary({{parse_axis("X1"), 1.0}});
  EXPECT_LT((u - kI * to_matrix(parse_axis("X1"))).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(WordUnitary, EmptyIsIdentity) {
  EXPECT_TRUE(word_unitary(RotationWord{}).isIdentity(0.0));
}

TEST(WordUnitary, XXHalfIsExactForm) {
  const Mat4cd u = word_unitary({{parse_axis("X1X2"), 0.5}});
  const Mat4cd expected =
      (Mat4cd::Identity() + kI * to_matrix(parse_axis("X1X2"))) / std::sqrt(2.0);
  EXPECT_LT((u - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((u.adjoint() * u - Mat4cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(WordUnitary, DMapsGroundToBell) {
  Ket4cd bell = Ket4cd::Zero();
  bell[0] = 1.0 / std::sqrt(2.0);
  bell[3] = kI / std::sqrt(2.0);
  const Ket4cd out = word_unitary(build_D()).col(0);
  EXPECT_TRUE(equal_up_to_global_phase(out, bell, 1e-12));
}

TEST(WordUnitary, FloatInstantiationAgrees) {
  const Mat4<float> f = word_unitary<float>(build_cnot_word());
  const Mat4cd d = word_unitary(build_cnot_word());
  EXPECT_LT((f.cast<std::complex<double>>() - d).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(ConjugatePauli, Examples) {
  EXPECT_EQ(conjugate_pauli({{parse_axis("Y1"), 0.5}}, parse_axis("Z1")), -parse_axis("X1"));
  EXPECT_EQ(conjugate_pauli(build_cnot_word(), parse_axis("X1")), parse_axis("X1X2"));
  EXPECT_EQ(conjugate_pauli(build_cnot_word(), PauliString{}), PauliString{});
}

TEST(ConjugatePauli, HeisenbergTableOfCnot) {
  const auto w = build_cnot_word();
  EXPECT_EQ(conjugate_pauli(w, parse_axis("Z1")), parse_axis("Z1"));
  EXPECT_EQ(conjugate_pauli(w, parse_axis("X1")), parse_axis("X1X2"));
  EXPECT_EQ(conjugate_pauli(w, parse_axis("Z2")), parse_axis("Z1Z2"));
  EXPECT_EQ(conjugate_pauli(w, parse_axis("X2")), parse_axis("X2"));
}

void expect_conjugation_matches_matrix(const RotationWord& w) {
  const Mat4cd u = word_unitary(w);
  for (int k = 1; k < 16; ++k) {
    const auto p = PauliString::from_index(k);
    const Mat4cd expected = u * to_matrix(p) * u.adjoint();
    EXPECT_LT((to_matrix(conjugate_pauli(w, p)) - expected).cwiseAbs().maxCoeff(), 1e-12)
        << format_word(w) << " on " << to_string(p);
  }
}

TEST(ConjugatePauli, MatchesMatrixForCompiledWords) {
  expect_conjugation_matches_matrix(build_cnot_word());
  expect_conjugation_matches_matrix(build_D());
  expect_conjugation_matches_matrix({{parse_axis("X1X2"), 0.5}});
}

TEST(ConjugatePauli, MatchesMatrixForRandomCliffordWords) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> axis(1, 15), exponent(-4, 4), length(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    RotationWord w;
    for (int n = length(rng); n > 0; --n)
      w.push_back({PauliString::from_index(axis(rng), rng() % 2 ? 2 : 0), 0.5 * exponent(rng)});
    expect_conjugation_matches_matrix(w);
  }
}

TEST(ConjugatePauli, RejectsNonClifford) {
  EXPECT_THROW(conjugate_pauli({{parse_axis("X1"), 0.25}}, parse_axis("Z1")),
               NonCliffordExponent);
}

TEST(BuildD, IsFourthRootOfIdentity) {
  const Mat4cd d = word_unitary(build_D());
  const Mat4cd d2 = d * d;
  EXPECT_LT((d2 * d2 - Mat4cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((d2 + to_matrix(parse_axis("Y1Y2"))).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_FALSE(equal_up_to_global_phase(d2, Mat4cd::Identity(), 1e-6));
}

TEST(BuildD, FactorsCommute) {
  const auto d = build_D();
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], (Rotation{parse_axis("X1X2"), 0.5}));
  EXPECT_EQ(d[1], (Rotation{parse_axis("Z1Z2"), -0.5}));
  EXPECT_EQ(conjugate_pauli({d[1]}, d[0].axis), d[0].axis);
  EXPECT_EQ(conjugate_pauli({d[0]}, d[1].axis), d[1].axis);
}

TEST(XXHalf, EighthPowerIsIdentity) {
  const Mat4cd u = word_unitary({{parse_axis("X1X2"), 0.5}});
  Mat4cd acc = Mat4cd::Identity();
  for (int i = 0; i < 8; ++i) acc = u * acc;
  EXPECT_LT((acc - Mat4cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BuildCnotWord, EqualsCnot) {
  const Mat4cd u = word_unitary(build_cnot_word());
  EXPECT_TRUE(equal_up_to_global_phase(u, cnot_matrix(), 1e-10));
  Ket4cd k10 = Ket4cd::Zero(), k11 = Ket4cd::Zero(), k00 = Ket4cd::Zero();
  k10[2] = k11[3] = k00[0] = 1.0;
  EXPECT_TRUE(equal_up_to_global_phase(Ket4cd(u * k10), k11, 1e-12));
  EXPECT_TRUE(equal_up_to_global_phase(Ket4cd(u * k00), k00, 1e-12));
}

TEST(EqualUpToGlobalPhase, Examples) {
  const Mat4cd u = word_unitary(build_cnot_word());
  EXPECT_TRUE(equal_up_to_global_phase(u, Mat4cd(kI * u), 1e-12));
  EXPECT_FALSE(equal_up_to_global_phase(cnot_matrix(), Mat4cd::Identity(), 1e-10));
}

TEST(WordText, RoundTrip) {
  const std::string text = "X2^1/2 Y1^1/2 X1X2^1/2 Y1^-1/2 Z1^1/2";
  EXPECT_EQ(parse_word(text), build_cnot_word());
  EXPECT_EQ(format_word(build_cnot_word()), text);
  EXPECT_EQ(parse_word("  X1^3/4\tZ1Z2^-1/2 "),
            (RotationWord{{parse_axis("X1"), 0.75}, {parse_axis("Z1Z2"), -0.5}}));
}

TEST(WordText, RejectsBadTokens) {
  for (const char* bad : {"Q1^1/2", "X1^1", "X1^1/0", "X1X^1/2", "X3^1/2", "X1^a/2", "X1 ^1/2"})
    EXPECT_THROW(parse_word(bad), ParseError) << bad;
}

}  // namespace
}  // namespace flicforq
