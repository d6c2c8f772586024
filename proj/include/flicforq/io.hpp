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

// JSON schemas for parameters, sequences and reports.
//
//   {"w1z":1.05,"w2z":0.95,"wxx":0.01,
//    "segments":[{"start":0,"duration":125.6637,"q1":{"x":0,"y":0.0125},
//                 "q2":{"x":0,"y":0},"envelope":{"kind":"square"},"flip":null}],
//    "virtual_z":[{"qubit":1,"angle":1.5707963,"t":1633.6281}]}
//
// A flip, when present, is {"t":<absolute time>,"qubit":1|2}. Raised-cosine
// envelopes are {"kind":"raised_cosine","rise":<time>}. Optional keys:
// segment "label", sequence "target" (rotation word text) and "total_time".

#ifndef FLICFORQ_IO_HPP_
#define FLICFORQ_IO_HPP_

#include <string>
#include <utility>

#include "json.hpp"

#include "flicforq/analysis.hpp"
#include "flicforq/model.hpp"

namespace flicforq {

using nlohmann::json;

/// Throws SchemaError on missing or mistyped fields, InvalidParams on
/// physically invalid values.
SystemParams params_from_json(const json& j);
PulseSequence sequence_from_json(const json& j);

json to_json(const SystemParams& p);
json to_json(const SystemParams& p, const PulseSequence& seq);
json to_json(const FidelityReport& r);
json to_json(const SidebandReport& r);
json to_json(const OneQubitBudget& b);

/// Reads a JSON file; SchemaError if it cannot be opened or parsed.
json read_json_file(const std::string& path);

/// Initial state from "00".."11", "bloch:x1,y1,z1;x2,y2,z2" or "raw:c1,...,c15"
/// (coefficients in Pauli-index order IX, IY, IZ, XI, ..., ZZ).
DensityState parse_initial_state(const std::string& spec);

}  // namespace flicforq

#endif  // FLICFORQ_IO_HPP_
