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

#include "flicforq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <vector>

#include "flicforq/error.hpp"

namespace flicforq {

namespace {

double number(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(where + ": missing \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number()) throw SchemaError(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

json nullable(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Quadratures quadratures_from_json(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return {};
  const auto& q = j.at(key);
  if (!q.is_object()) throw SchemaError(where + ": \"" + key + "\" must be an object");
  const std::string w = where + "." + key;
  return {q.contains("x") ? number(q, "x", w) : 0.0, q.contains("y") ? number(q, "y", w) : 0.0};
}

Envelope envelope_from_json(const json& j, const std::string& where) {
  if (!j.contains("envelope") || j.at("envelope").is_null()) return {};
  const auto& e = j.at("envelope");
  if (!e.is_object() || !e.contains("kind") || !e.at("kind").is_string())
    throw SchemaError(where + ": envelope needs a string \"kind\"");
  const auto kind = e.at("kind").get<std::string>();
  if (kind == "square") return {};
  if (kind == "raised_cosine")
    return {EnvelopeKind::kRaisedCosine, number(e, "rise", where + ".envelope")};
  throw SchemaError(where + ": unknown envelope kind \"" + kind + "\"");
}

int qubit_from_json(const json& j, const std::string& where) {
  const double q = number(j, "qubit", where);
  if (q != 1.0 && q != 2.0) throw SchemaError(where + ": qubit must be 1 or 2");
  return static_cast<int>(q);
}

std::vector<double> parse_numbers(std::string_view text, std::size_t expected,
                                  const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(",;", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(what + ": bad number \"" + std::string(tok) + "\"");
    out.push_back(v);
    pos = end + 1;
  }
  if (out.size() != expected)
    throw ParseError(what + ": expected " + std::to_string(expected) + " numbers, got " +
                     std::to_string(out.size()));
  return out;
}

}  // namespace

SystemParams params_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("parameters must be a JSON object");
  SystemParams p{number(j, "w1z", "params"), number(j, "w2z", "params"),
                 number(j, "wxx", "params")};
  validate(p);
  return p;
}

PulseSequence sequence_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("sequence must be a JSON object");
  PulseSequence seq;
  if (j.contains("segments")) {
    const auto& segs = j.at("segments");
    if (!segs.is_array()) throw SchemaError("\"segments\" must be an array");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const auto& js = segs[i];
      const std::string where = "segments[" + std::to_string(i) + "]";
      PulseSegment s;
      s.start = number(js, "start", where);
      s.duration = number(js, "duration", where);
      if (s.start < 0.0 || s.duration < 0.0)
        throw SchemaError(where + ": start and duration must be non-negative");
      s.q1 = quadratures_from_json(js, "q1", where);
      s.q2 = quadratures_from_json(js, "q2", where);
      s.envelope = envelope_from_json(js, where);
      if (js.contains("flip") && !js.at("flip").is_null()) {
        const auto& f = js.at("flip");
        s.flip = Flip{number(f, "t", where + ".flip"), qubit_from_json(f, where + ".flip")};
      }
      if (js.contains("label")) {
        if (!js.at("label").is_string()) throw SchemaError(where + ": label must be a string");
        s.label = js.at("label").get<std::string>();
      }
      seq.segments.push_back(std::move(s));
    }
  }
  if (j.contains("virtual_z")) {
    const auto& zs = j.at("virtual_z");
    if (!zs.is_array()) throw SchemaError("\"virtual_z\" must be an array");
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const std::string where = "virtual_z[" + std::to_string(i) + "]";
      seq.virtual_z.push_back(
          {qubit_from_json(zs[i], where), number(zs[i], "angle", where), number(zs[i], "t", where)});
    }
  }
  if (j.contains("total_time") && !j.at("total_time").is_null())
    seq.total_time_override = number(j, "total_time", "sequence");
  if (j.contains("target") && !j.at("target").is_null()) {
    if (!j.at("target").is_string()) throw SchemaError("\"target\" must be a string");
    seq.target = parse_word(j.at("target").get<std::string>());
  }
  seq.sort();
  return seq;
}

json to_json(const SystemParams& p) { return {{"w1z", p.w1z}, {"w2z", p.w2z}, {"wxx", p.wxx}}; }

json to_json(const SystemParams& p, const PulseSequence& seq) {
  json j = to_json(p);
  json segs = json::array();
  for (const auto& s : seq.segments) {
    json js = {{"start", s.start},
               {"duration", s.duration},
               {"q1", {{"x", s.q1.x}, {"y", s.q1.y}}},
               {"q2", {{"x", s.q2.x}, {"y", s.q2.y}}}};
    if (s.envelope.kind == EnvelopeKind::kSquare)
      js["envelope"] = {{"kind", "square"}};
    else
      js["envelope"] = {{"kind", "raised_cosine"}, {"rise", s.envelope.rise}};
    js["flip"] = s.flip ? json{{"t", s.flip->t}, {"qubit", s.flip->qubit}} : json(nullptr);
    if (!s.label.empty()) js["label"] = s.label;
    segs.push_back(std::move(js));
  }
  j["segments"] = std::move(segs);
  json zs = json::array();
  for (const auto& z : seq.virtual_z) zs.push_back({{"qubit", z.qubit}, {"angle", z.angle}, {"t", z.t}});
  j["virtual_z"] = std::move(zs);
  if (seq.total_time_override) j["total_time"] = *seq.total_time_override;
  if (seq.target) j["target"] = format_word(*seq.target);
  return j;
}

json to_json(const FidelityReport& r) {
  json per = json::object();
  for (const auto& [k, v] : r.per_state) per[k] = v;
  return {{"per_state", per},
          {"process", r.process},
          {"alignment", r.alignment},
          {"notes", r.notes}};
}

json to_json(const SidebandReport& r) {
  return {{"q1_sidebands", {r.q1_lower, r.q1_upper}},
          {"q2_sidebands", {r.q2_lower, r.q2_upper}},
          {"gap", r.gap},
          {"resonant", r.resonant}};
}

json to_json(const OneQubitBudget& b) {
  return {{"parasitic_angle", nullable(b.parasitic_angle)},
          {"parasitic_argument", b.parasitic_argument},
          {"simulated_error", b.simulated_error},
          {"unaligned_error", b.unaligned_error},
          {"worst_case", b.worst_case}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

DensityState parse_initial_state(const std::string& spec) {
  if (spec.size() == 2 && (spec[0] == '0' || spec[0] == '1') && (spec[1] == '0' || spec[1] == '1'))
    return DensityState::basis(spec[0] - '0', spec[1] - '0');
  DensityState rho;
  if (spec.rfind("bloch:", 0) == 0) {
    const auto v = parse_numbers(std::string_view(spec).substr(6), 6, "bloch state");
    const Vector3d b1(v[0], v[1], v[2]);
    const Vector3d b2(v[3], v[4], v[5]);
    if (b1.norm() > 1.0 + 1e-9 || b2.norm() > 1.0 + 1e-9)
      throw ParseError("bloch state: vectors must have norm <= 1");
    rho = DensityState::product(b1, b2);
  } else if (spec.rfind("raw:", 0) == 0) {
    const auto v = parse_numbers(std::string_view(spec).substr(4), 15, "raw state");
    for (int k = 0; k < 15; ++k) rho.c[k] = v[k];
  } else {
    throw ParseError("unknown initial state \"" + spec + "\"");
  }
  Eigen::SelfAdjointEigenSolver<Mat4cd> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw NegativeEigenvalue("initial state is not positive semidefinite");
  return rho;
}

}  // namespace flicforq
