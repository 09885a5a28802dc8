// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qwalk/circuit.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/simulator.hpp"

namespace qwalk {

inline constexpr int kSchemaVersion = 1;

/// Text with 17 significant digits, enough to round-trip a double.
std::string format_double(double value);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

// Graph spec: {"n": 4, "row": [...], "gamma": 1} or
// {"kind": "paley", "params": {"p": 13}, "gamma": 1}. Family params take one
// of "n", "p", "m" or "size".
CirculantGraph parse_graph_spec(const std::string &json_text);
CirculantGraph load_graph_spec(const std::filesystem::path &path);

/// Columns m,lambda.
std::string spectrum_csv(const Spectrum &spectrum);
std::string spectrum_json(const CirculantGraph &graph, const Spectrum &spectrum);

std::string circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const std::string &json_text);

/// OpenQASM 2.0 on qelib1 gates after lowering multi-controlled phases.
/// Circuits with oracle gates throw Unsupported.
std::string circuit_to_qasm(const Circuit &circuit);

/// {"schema_version", "n", "re", "im"}.
std::string state_to_json(const StateVector &state);
StateVector state_from_json(const std::string &json_text);

/// Columns outcome,value.
std::string distribution_csv(const Distribution &dist);
std::string counts_csv(const ShotCounts &counts);

} // namespace qwalk
