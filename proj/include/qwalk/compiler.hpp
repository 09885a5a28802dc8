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

#include <optional>
#include <string>

#include "qwalk/circuit.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

enum class Strategy { FewEigenvalues, Oracle, HadamardComplete, Auto };

std::optional<Strategy> parse_strategy(const std::string &name);
std::string strategy_name(Strategy strategy);

struct CompilerOptions {
    Strategy strategy = Strategy::Auto;
    /// Fractional bits of the eigenvalue register.
    int k_frac = 24;
    /// Integer bits including sign; sized from max |lambda| when unset.
    std::optional<int> k_int;
    double grouping_tol = kDefaultGroupingTol;
    /// Auto picks the oracle strategy above this many nonzero groups.
    int auto_group_limit = 64;
};

inline constexpr int kMaxQftQubits = 14;

/// Q with Q_jk = omega^{jk} / sqrt(N) on qubits 0..n-1, including the
/// terminal bit-reversal swaps. `inverse` gives Q^dagger.
Circuit qft_circuit(int n, bool inverse = false);

/// exp(-i t Lambda) as multi-controlled phases keyed on the bit pattern of
/// each Fourier index m (or on a shared subcube for a whole group).
Circuit diagonal_circuit_few(const Spectrum &spectrum, double t, double grouping_tol = kDefaultGroupingTol);

/// exp(-i t Lambda) by computing the eigenvalue into an ancilla register,
/// applying a linear phase ramp, and uncomputing.
Circuit diagonal_circuit_oracle(const EigenvalueOracle &oracle, double t, const CompilerOptions &options);

/// Hadamard-basis circuit for the complete graph on 2^n vertices. The emitted
/// gates are the same either way; without self-loops the walk operator is
/// e^{i gamma t} times the circuit unitary.
Circuit complete_graph_circuit(int n, double t, double gamma, bool self_loops = true);

/// Full walk circuit exp(-itH) = Q^dagger exp(-it Lambda) Q; applies Q first.
Circuit compile_ctqw(const CirculantGraph &graph, double t, const CompilerOptions &options = {});

/// Strategy compile_ctqw would use under Auto.
Strategy resolve_strategy(const CirculantGraph &graph, const CompilerOptions &options);

/// Rewrites every multi-controlled phase (and phase ramp) into Hadamard,
/// Pauli-X, Phase, Swap and singly-controlled phase gates.
Circuit lower_multicontrolled(const Circuit &circuit);

} // namespace qwalk
