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

#include "flicforq/pauli.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace flicforq {

namespace {

// sigma_a sigma_b = i^k sigma_c
struct SingleProduct {
  std::uint8_t k;
  Pauli c;
};

SingleProduct single_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {0, b};
  if (b == Pauli::I) return {0, a};
  if (a == b) return {0, Pauli::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto c = static_cast<Pauli>(ia ^ ib);
  // X->Y->Z->X is the cyclic (+i) order.
  const bool cyclic = ((ib - ia + 3) % 3) == 1;
  return {static_cast<std::uint8_t>(cyclic ? 1 : 3), c};
}

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

}  // namespace

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  const auto p1 = single_product(a.q1, b.q1);
  const auto p2 = single_product(a.q2, b.q2);
  return {static_cast<std::uint8_t>((a.phase + b.phase + p1.k + p2.k) % 4), p1.c, p2.c};
}

PauliString operator-(const PauliString& p) {
  return {static_cast<std::uint8_t>((p.phase + 2) % 4), p.q1, p.q2};
}

bool commutes(const PauliString& a, const PauliString& b) {
  int anti = 0;
  if (a.q1 != Pauli::I && b.q1 != Pauli::I && a.q1 != b.q1) ++anti;
  if (a.q2 != Pauli::I && b.q2 != Pauli::I && a.q2 != b.q2) ++anti;
  return anti % 2 == 0;
}

PauliString parse_axis(std::string_view text) {
  PauliString p;
  bool seen[2] = {false, false};
  if (text.empty() || text.size() % 2 != 0) throw ParseError("bad axis '" + std::string(text) + "'");
  for (std::size_t i = 0; i < text.size(); i += 2) {
    Pauli f;
    switch (text[i]) {
      case 'X': f = Pauli::X; break;
      case 'Y': f = Pauli::Y; break;
      case 'Z': f = Pauli::Z; break;
      default: throw ParseError("bad axis '" + std::string(text) + "'");
    }
    const char q = text[i + 1];
    if ((q != '1' && q != '2') || seen[q - '1'])
      throw ParseError("bad axis '" + std::string(text) + "'");
    seen[q - '1'] = true;
    (q == '1' ? p.q1 : p.q2) = f;
  }
  return p;
}

std::string to_string(const PauliString& p) {
  static constexpr const char* prefix[4] = {"", "i", "-", "-i"};
  std::string out = prefix[p.phase % 4];
  if (p.is_identity()) return out + "I";
  if (p.q1 != Pauli::I) out += std::string{pauli_char(p.q1), '1'};
  if (p.q2 != Pauli::I) out += std::string{pauli_char(p.q2), '2'};
  return out;
}

PauliVector pauli_coordinates(const Mat4cd& m) {
  PauliVector c;
  for (int k = 0; k < 16; ++k)
    c[k] = (to_matrix(PauliString::from_index(k)) * m).trace().real() / 4.0;
  return c;
}

PauliString conjugate_pauli(const RotationWord& word, const PauliString& p) {
  PauliString out = p;
  for (const auto& r : word) {
    if (!r.axis.is_hermitian()) throw Error("rotation axis must be Hermitian");
    const double twice = 2.0 * r.exponent;
    const double k_real = std::round(twice);
    if (std::abs(twice - k_real) > 1e-12)
      throw NonCliffordExponent("exponent " + std::to_string(r.exponent) + " is not a multiple of 1/2");
    if (commutes(r.axis, out)) continue;
    // exp(i theta P) p exp(-i theta P) = exp(2 i theta P) p for anticommuting p,
    // with 2 theta = k pi / 2.
    int k = static_cast<int>(k_real) % 4;
    if (k < 0) k += 4;
    if (r.axis.phase == 2) k = (4 - k) % 4;
    const PauliString axis{0, r.axis.q1, r.axis.q2};
    switch (k) {
      case 0: break;
      case 1: out = PauliString{1, Pauli::I, Pauli::I} * axis * out; break;
      case 2: out = -out; break;
      case 3: out = PauliString{3, Pauli::I, Pauli::I} * axis * out; break;
    }
  }
  return out;
}

RotationWord build_D() {
  return {{parse_axis("X1X2"), 0.5}, {parse_axis("Z1Z2"), -0.5}};
}

RotationWord build_cnot_word() {
  return {{parse_axis("X2"), 0.5},
          {parse_axis("Y1"), 0.5},
          {parse_axis("X1X2"), 0.5},
          {parse_axis("Y1"), -0.5},
          {parse_axis("Z1"), 0.5}};
}

Mat4cd cnot_matrix() {
  Mat4cd m = Mat4cd::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

RotationWord parse_word(std::string_view text) {
  RotationWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const auto slash = token.find('/');
    if (caret == std::string::npos || slash == std::string::npos || slash < caret)
      throw ParseError("token '" + token + "' is not <axis>^<num>/<den>");
    const auto axis = parse_axis(std::string_view(token).substr(0, caret));
    long num = 0;
    long den = 0;
    const char* b = token.data();
    auto r1 = std::from_chars(b + caret + 1, b + slash, num);
    auto r2 = std::from_chars(b + slash + 1, b + token.size(), den);
    if (r1.ec != std::errc{} || r1.ptr != b + slash || r2.ec != std::errc{} ||
        r2.ptr != b + token.size() || den <= 0)
      throw ParseError("token '" + token + "' has a malformed exponent");
    word.push_back({axis, static_cast<double>(num) / static_cast<double>(den)});
  }
  return word;
}

std::string format_word(const RotationWord& word) {
  std::string out;
  for (const auto& r : word) {
    PauliString axis = r.axis;
    double e = r.exponent;
    if (axis.phase == 2) {
      axis.phase = 0;
      e = -e;
    }
    if (axis.phase != 0 || axis.is_identity()) throw Error("cannot format axis " + to_string(r.axis));
    long den = 1;
    while (den <= 1024 && std::abs(e * den - std::round(e * den)) > 1e-9) den *= 2;
    if (den > 1024) throw Error("exponent " + std::to_string(e) + " has no short dyadic form");
    long num = std::lround(e * den);
    const long g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (!out.empty()) out += ' ';
    out += to_string(axis) + "^" + std::to_string(num) + "/" + std::to_string(den);
  }
  return out;
}

}  // namespace flicforq
