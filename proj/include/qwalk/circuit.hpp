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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

// Qubit 0 is the most significant bit of a basis index (big-endian), so a
// vertex x on n data qubits is the basis state |x> read left to right.

enum class Polarity : std::uint8_t { IfZero, IfOne };

struct Control {
    int qubit = 0;
    Polarity polarity = Polarity::IfOne;

    bool operator==(const Control &) const = default;
};

/// Contiguous block of qubits, most significant first.
struct QubitRange {
    int first = 0;
    int size = 0;

    int last() const { return first + size - 1; }
    bool operator==(const QubitRange &) const = default;
};

struct Hadamard {
    int target = 0;
};

struct PauliX {
    int target = 0;
};

/// diag(1, e^{i theta}) on the target.
struct Phase {
    int target = 0;
    double theta = 0.0;
};

/// Multiplies e^{i theta} onto basis states whose controls all match their
/// polarity and, when a target is set, whose target bit is 1. With no
/// controls and no target it is a global phase.
struct MultiControlledPhase {
    std::vector<Control> controls;
    std::optional<int> target;
    double theta = 0.0;
};

struct Swap {
    int a = 0;
    int b = 0;
};

/// XORs the fixed-point encoding of f(x) into the ancilla register, where x
/// is the value of the data register. Interpreted by the simulator.
struct OracleCompute {
    QubitRange data;
    QubitRange ancilla;
    int oracle_id = 0;
};

/// Inverse of OracleCompute (XOR is an involution, so identical action).
struct OracleUncompute {
    QubitRange data;
    QubitRange ancilla;
    int oracle_id = 0;
};

/// exp(-i t v) where v = value_scale * (two's-complement integer held in the
/// ancilla register). Equivalent to one Phase per ancilla bit.
struct AncillaPhaseRamp {
    QubitRange ancilla;
    double t = 0.0;
    double value_scale = 1.0;
};

using Gate = std::variant<Hadamard, PauliX, Phase, MultiControlledPhase, Swap, OracleCompute, OracleUncompute,
                          AncillaPhaseRamp>;

std::string gate_kind(const Gate &gate);

/// Qubits the gate acts on, in no particular order.
std::vector<int> gate_support(const Gate &gate);

/// Eigenvalue oracle plus its two's-complement fixed-point format.
struct FixedPointOracle {
    EigenvalueOracle oracle;
    int k_int = 1;
    int k_frac = 24;

    int width() const { return k_int + k_frac; }
    /// Rounded register value as a k-bit two's-complement word.
    std::uint64_t encode(std::int64_t x) const;
    /// Signed integer held by an encoded word.
    std::int64_t decode_signed(std::uint64_t word) const;
    /// Truncated eigenvalue the circuit actually applies.
    double truncated_value(std::int64_t x) const;
};

/// Minimum integer bits (sign included) so every |lambda| < 2^(k_int-1).
int integer_bits_for(double max_abs_value);

struct Circuit {
    int n_data = 0;
    int n_ancilla = 0;
    std::vector<Gate> gates;
    std::vector<FixedPointOracle> oracles;

    int width() const { return n_data + n_ancilla; }
    bool has_oracle_gates() const;
    void append(const Circuit &other);
};

/// Checks index ranges, control/target distinctness, finiteness of angles,
/// and matched nesting of oracle compute/uncompute pairs.
void validate(const Circuit &circuit);

struct CircuitStats {
    std::map<std::string, int> counts;
    /// Multi-controlled phases bucketed by number of controls (target excluded).
    std::map<int, int> controlled_phase_by_controls;
    int total = 0;
    int depth = 0;
    int width = 0;
};

CircuitStats circuit_stats(const Circuit &circuit);

/// Inverse circuit: reversed order, negated angles.
Circuit inverse(const Circuit &circuit);

} // namespace qwalk
