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

#include "qwalk/compiler.hpp"

#include <bit>
#include <cmath>

#include "qwalk/detail/overloaded.hpp"

namespace qwalk {

namespace {

using detail::overloaded;

Polarity bit_polarity(std::uint64_t index, int qubit, int n) {
    return ((index >> (n - 1 - qubit)) & 1U) ? Polarity::IfOne : Polarity::IfZero;
}

int data_qubits_for(int n_vertices) {
    if (n_vertices < 2 || !is_power_of_two(static_cast<std::uint64_t>(n_vertices))) {
        throw Error(ErrorCode::NotPowerOfTwo,
                    "N = " + std::to_string(n_vertices) + " is not a power of two with at least one qubit");
    }
    return log2_exact(static_cast<std::uint64_t>(n_vertices));
}

// Controlled phase with all-if-one controls; recursive angle halving.
void emit_controlled_phase(std::vector<Gate> &out, const std::vector<int> &controls, int target, double theta);

// Multi-controlled NOT as H . C^k Z . H on the target.
void emit_controlled_not(std::vector<Gate> &out, const std::vector<int> &controls, int target) {
    out.push_back(Hadamard{target});
    emit_controlled_phase(out, controls, target, kPi);
    out.push_back(Hadamard{target});
}

void emit_controlled_phase(std::vector<Gate> &out, const std::vector<int> &controls, int target, double theta) {
    if (controls.empty()) {
        out.push_back(Phase{target, theta});
        return;
    }
    if (controls.size() == 1) {
        out.push_back(MultiControlledPhase{{Control{controls.front(), Polarity::IfOne}}, target, theta});
        return;
    }
    const int last = controls.back();
    const std::vector<int> rest(controls.begin(), controls.end() - 1);
    out.push_back(MultiControlledPhase{{Control{last, Polarity::IfOne}}, target, theta / 2});
    emit_controlled_not(out, rest, last);
    out.push_back(MultiControlledPhase{{Control{last, Polarity::IfOne}}, target, -theta / 2});
    emit_controlled_not(out, rest, last);
    emit_controlled_phase(out, rest, target, theta / 2);
}

void lower_gate(std::vector<Gate> &out, const MultiControlledPhase &gate) {
    if (gate.controls.empty() && !gate.target) {
        // e^{i theta} I = (X P X) P on any qubit.
        out.push_back(PauliX{0});
        out.push_back(Phase{0, gate.theta});
        out.push_back(PauliX{0});
        out.push_back(Phase{0, gate.theta});
        return;
    }
    std::vector<Control> controls = gate.controls;
    std::vector<int> flipped;
    int target = 0;
    if (gate.target) {
        target = *gate.target;
    } else {
        const Control last = controls.back();
        controls.pop_back();
        target = last.qubit;
        if (last.polarity == Polarity::IfZero) {
            flipped.push_back(target);
        }
    }
    std::vector<int> qubits;
    for (const Control &c : controls) {
        qubits.push_back(c.qubit);
        if (c.polarity == Polarity::IfZero) {
            flipped.push_back(c.qubit);
        }
    }
    for (int q : flipped) {
        out.push_back(PauliX{q});
    }
    emit_controlled_phase(out, qubits, target, gate.theta);
    for (int q : flipped) {
        out.push_back(PauliX{q});
    }
}

void lower_gate(std::vector<Gate> &out, const AncillaPhaseRamp &gate) {
    const int k = gate.ancilla.size;
    for (int j = 0; j < k; ++j) {
        double weight = std::ldexp(gate.value_scale, k - 1 - j);
        if (j == 0) {
            weight = -weight;
        }
        out.push_back(Phase{gate.ancilla.first + j, -gate.t * weight});
    }
}

} // namespace

std::optional<Strategy> parse_strategy(const std::string &name) {
    if (name == "few" || name == "few_eigenvalues") return Strategy::FewEigenvalues;
    if (name == "oracle") return Strategy::Oracle;
    if (name == "hadamard" || name == "hadamard_complete") return Strategy::HadamardComplete;
    if (name == "auto") return Strategy::Auto;
    return std::nullopt;
}

std::string strategy_name(Strategy strategy) {
    switch (strategy) {
    case Strategy::FewEigenvalues: return "few_eigenvalues";
    case Strategy::Oracle: return "oracle";
    case Strategy::HadamardComplete: return "hadamard_complete";
    case Strategy::Auto: return "auto";
    }
    return "unknown";
}

Circuit qft_circuit(int n, bool inverse_flag) {
    if (n < 1 || n > kMaxQftQubits) {
        throw Error(ErrorCode::WidthExceeded,
                    "QFT width " + std::to_string(n) + " outside 1.." + std::to_string(kMaxQftQubits));
    }
    Circuit c;
    c.n_data = n;
    for (int q = 0; q < n; ++q) {
        c.gates.push_back(Hadamard{q});
        for (int r = q + 1; r < n; ++r) {
            const double theta = 2.0 * kPi / std::ldexp(1.0, r - q + 1);
            c.gates.push_back(MultiControlledPhase{{Control{r, Polarity::IfOne}}, q, theta});
        }
    }
    for (int q = 0; q < n / 2; ++q) {
        c.gates.push_back(Swap{q, n - 1 - q});
    }
    return inverse_flag ? inverse(c) : c;
}

Circuit diagonal_circuit_few(const Spectrum &spec, double t, double grouping_tol) {
    const int n = data_qubits_for(spec.size());
    Circuit c;
    c.n_data = n;
    for (const EigenvalueGroup &group : spec.groups) {
        if (std::abs(group.value) <= grouping_tol) {
            continue;
        }
        // A group merges into one gate only if its indices fill a subcube.
        std::uint64_t all_and = ~std::uint64_t{0};
        std::uint64_t all_or = 0;
        for (int m : group.indices) {
            all_and &= static_cast<std::uint64_t>(m);
            all_or |= static_cast<std::uint64_t>(m);
        }
        const std::uint64_t free_bits = all_or & ~all_and;
        if ((std::uint64_t{1} << std::popcount(free_bits)) == group.indices.size()) {
            MultiControlledPhase gate;
            gate.theta = -t * group.value;
            for (int q = 0; q < n; ++q) {
                const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
                if (!(free_bits & bit)) {
                    gate.controls.push_back(Control{q, (all_and & bit) ? Polarity::IfOne : Polarity::IfZero});
                }
            }
            c.gates.push_back(std::move(gate));
            continue;
        }
        for (int m : group.indices) {
            MultiControlledPhase gate;
            gate.theta = -t * spec.eigenvalues[m];
            for (int q = 0; q < n; ++q) {
                gate.controls.push_back(Control{q, bit_polarity(static_cast<std::uint64_t>(m), q, n)});
            }
            c.gates.push_back(std::move(gate));
        }
    }
    return c;
}

Circuit diagonal_circuit_oracle(const EigenvalueOracle &oracle, double t, const CompilerOptions &options) {
    const int n = data_qubits_for(oracle.n_vertices());
    if (options.k_frac < 1) {
        throw Error(ErrorCode::InvalidInput, "k_frac must be at least 1");
    }
    // Size from the rounded register values so that rounding up at the top of
    // the range never overflows an auto-sized register.
    double max_abs = 0.0;
    for (std::int64_t x = 0; x < oracle.n_vertices(); ++x) {
        const double rounded = std::nearbyint(oracle.evaluate(x) * std::ldexp(1.0, options.k_frac));
        max_abs = std::max(max_abs, std::abs(rounded) * std::ldexp(1.0, -options.k_frac));
    }
    const int k_int = options.k_int.value_or(integer_bits_for(max_abs));
    if (k_int < 1) {
        throw Error(ErrorCode::InvalidInput, "k_int must be at least 1");
    }
    if (max_abs >= std::ldexp(1.0, k_int - 1)) {
        throw Error(ErrorCode::RangeOverflow, "max |lambda| = " + std::to_string(max_abs) + " needs more than " +
                                                  std::to_string(k_int) + " integer bits");
    }
    if (k_int + options.k_frac > 62) {
        throw Error(ErrorCode::WidthExceeded, "eigenvalue register wider than 62 bits");
    }
    FixedPointOracle fp{oracle, k_int, options.k_frac};
    for (std::int64_t x = 0; x < oracle.n_vertices(); ++x) {
        (void)fp.encode(x); // rounding can still overflow at the top of the range
    }

    Circuit c;
    c.n_data = n;
    c.n_ancilla = fp.width();
    const QubitRange data{0, n};
    const QubitRange ancilla{n, fp.width()};
    c.oracles.push_back(std::move(fp));
    c.gates.push_back(OracleCompute{data, ancilla, 0});
    c.gates.push_back(AncillaPhaseRamp{ancilla, t, std::ldexp(1.0, -options.k_frac)});
    c.gates.push_back(OracleUncompute{data, ancilla, 0});
    return c;
}

Circuit complete_graph_circuit(int n, double t, double gamma, bool /*self_loops*/) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidSize, "complete graph circuit needs at least one qubit");
    }
    Circuit c;
    c.n_data = n;
    // H then X maps the uniform eigenvector |+...+> onto |1...1>.
    for (int q = 0; q < n; ++q) {
        c.gates.push_back(Hadamard{q});
        c.gates.push_back(PauliX{q});
    }
    MultiControlledPhase phase;
    for (int q = 0; q + 1 < n; ++q) {
        phase.controls.push_back(Control{q, Polarity::IfOne});
    }
    phase.target = n - 1;
    phase.theta = -std::ldexp(gamma * t, n);
    c.gates.push_back(std::move(phase));
    for (int q = 0; q < n; ++q) {
        c.gates.push_back(PauliX{q});
        c.gates.push_back(Hadamard{q});
    }
    return c;
}

Strategy resolve_strategy(const CirculantGraph &graph, const CompilerOptions &options) {
    if (options.strategy != Strategy::Auto) {
        return options.strategy;
    }
    if (is_complete(graph)) {
        return Strategy::HadamardComplete;
    }
    const Spectrum spec = spectrum(graph, options.grouping_tol);
    return spec.nonzero_group_count(options.grouping_tol) <= options.auto_group_limit ? Strategy::FewEigenvalues
                                                                                      : Strategy::Oracle;
}

Circuit compile_ctqw(const CirculantGraph &graph, double t, const CompilerOptions &options) {
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::NonFinite, "evolution time is not finite");
    }
    const int n = data_qubits_for(graph.n_vertices());
    const Strategy strategy = resolve_strategy(graph, options);

    if (strategy == Strategy::HadamardComplete) {
        if (!is_complete(graph)) {
            throw Error(ErrorCode::Unsupported, "hadamard strategy requires a complete graph");
        }
        // H = gamma * (a J + (c_0 - a) I) with a the common off-diagonal weight.
        const double a = graph.first_row()[1];
        const double shift = graph.first_row()[0] - a;
        Circuit c = complete_graph_circuit(n, t, graph.gamma() * a, true);
        if (shift != 0.0) {
            c.gates.push_back(MultiControlledPhase{{}, std::nullopt, -t * graph.gamma() * shift});
        }
        return c;
    }

    Circuit c = qft_circuit(n);
    if (strategy == Strategy::FewEigenvalues) {
        c.append(diagonal_circuit_few(spectrum(graph, options.grouping_tol), t, options.grouping_tol));
    } else {
        c.append(diagonal_circuit_oracle(eigenvalue_oracle(graph), t, options));
    }
    c.append(qft_circuit(n, true));
    return c;
}

Circuit lower_multicontrolled(const Circuit &circuit) {
    Circuit out;
    out.n_data = circuit.n_data;
    out.n_ancilla = circuit.n_ancilla;
    out.oracles = circuit.oracles;
    for (const Gate &gate : circuit.gates) {
        std::visit(overloaded{
                       [&](const MultiControlledPhase &g) {
                           if (g.controls.size() == 1 && g.target &&
                               g.controls.front().polarity == Polarity::IfOne) {
                               out.gates.push_back(g);
                           } else if (g.controls.empty() && g.target) {
                               out.gates.push_back(Phase{*g.target, g.theta});
                           } else {
                               lower_gate(out.gates, g);
                           }
                       },
                       [&](const AncillaPhaseRamp &g) { lower_gate(out.gates, g); },
                       [&](const auto &g) { out.gates.push_back(g); },
                   },
                   gate);
    }
    return out;
}

} // namespace qwalk
