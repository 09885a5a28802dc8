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

#include "qwalk/circuit.hpp"
#include "qwalk/detail/overloaded.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qwalk {

namespace {

using detail::overloaded;

void push_range(std::vector<int> &out, const QubitRange &r) {
    for (int q = r.first; q <= r.last(); ++q) {
        out.push_back(q);
    }
}

} // namespace

std::string gate_kind(const Gate &gate) {
    return std::visit(overloaded{
                          [](const Hadamard &) { return std::string("hadamard"); },
                          [](const PauliX &) { return std::string("pauli_x"); },
                          [](const Phase &) { return std::string("phase"); },
                          [](const MultiControlledPhase &) { return std::string("multi_controlled_phase"); },
                          [](const Swap &) { return std::string("swap"); },
                          [](const OracleCompute &) { return std::string("oracle_compute"); },
                          [](const OracleUncompute &) { return std::string("oracle_uncompute"); },
                          [](const AncillaPhaseRamp &) { return std::string("ancilla_phase_ramp"); },
                      },
                      gate);
}

std::vector<int> gate_support(const Gate &gate) {
    std::vector<int> out;
    std::visit(overloaded{
                   [&](const Hadamard &g) { out.push_back(g.target); },
                   [&](const PauliX &g) { out.push_back(g.target); },
                   [&](const Phase &g) { out.push_back(g.target); },
                   [&](const MultiControlledPhase &g) {
                       for (const auto &c : g.controls) {
                           out.push_back(c.qubit);
                       }
                       if (g.target) {
                           out.push_back(*g.target);
                       }
                   },
                   [&](const Swap &g) {
                       out.push_back(g.a);
                       out.push_back(g.b);
                   },
                   [&](const OracleCompute &g) {
                       push_range(out, g.data);
                       push_range(out, g.ancilla);
                   },
                   [&](const OracleUncompute &g) {
                       push_range(out, g.data);
                       push_range(out, g.ancilla);
                   },
                   [&](const AncillaPhaseRamp &g) { push_range(out, g.ancilla); },
               },
               gate);
    return out;
}

std::uint64_t FixedPointOracle::encode(std::int64_t x) const {
    const double scaled = std::nearbyint(oracle.evaluate(x) * std::ldexp(1.0, k_frac));
    const double limit = std::ldexp(1.0, width() - 1);
    if (!(scaled < limit && scaled >= -limit)) {
        std::ostringstream msg;
        msg << "lambda_" << x << " = " << oracle.evaluate(x) << " does not fit " << k_int
            << " integer bits (sign included)";
        throw Error(ErrorCode::RangeOverflow, msg.str());
    }
    const auto value = static_cast<std::int64_t>(scaled);
    const std::uint64_t mask = width() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width()) - 1;
    return static_cast<std::uint64_t>(value) & mask;
}

std::int64_t FixedPointOracle::decode_signed(std::uint64_t word) const {
    const std::uint64_t sign = std::uint64_t{1} << (width() - 1);
    if (word & sign) {
        return static_cast<std::int64_t>(word) - static_cast<std::int64_t>(sign << 1);
    }
    return static_cast<std::int64_t>(word);
}

double FixedPointOracle::truncated_value(std::int64_t x) const {
    return std::ldexp(static_cast<double>(decode_signed(encode(x))), -k_frac);
}

int integer_bits_for(double max_abs_value) {
    int k = 1;
    while (max_abs_value >= std::ldexp(1.0, k - 1)) {
        ++k;
    }
    return k;
}

bool Circuit::has_oracle_gates() const {
    return std::any_of(gates.begin(), gates.end(), [](const Gate &g) {
        return std::holds_alternative<OracleCompute>(g) || std::holds_alternative<OracleUncompute>(g) ||
               std::holds_alternative<AncillaPhaseRamp>(g);
    });
}

void Circuit::append(const Circuit &other) {
    if (other.n_data != n_data) {
        throw Error(ErrorCode::WidthMismatch, "cannot append circuits with different data widths");
    }
    const int id_offset = static_cast<int>(oracles.size());
    const int anc_offset = n_ancilla;
    for (Gate g : other.gates) {
        std::visit(overloaded{
                       [&](OracleCompute &o) {
                           o.oracle_id += id_offset;
                           o.ancilla.first += anc_offset;
                       },
                       [&](OracleUncompute &o) {
                           o.oracle_id += id_offset;
                           o.ancilla.first += anc_offset;
                       },
                       [&](AncillaPhaseRamp &o) { o.ancilla.first += anc_offset; },
                       [](auto &) {},
                   },
                   g);
        gates.push_back(std::move(g));
    }
    oracles.insert(oracles.end(), other.oracles.begin(), other.oracles.end());
    n_ancilla += other.n_ancilla;
}

void validate(const Circuit &circuit) {
    const int width = circuit.width();
    auto check_qubit = [&](int q) {
        if (q < 0 || q >= width) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "qubit " + std::to_string(q) + " outside width " + std::to_string(width));
        }
    };
    auto check_angle = [](double theta) {
        if (!std::isfinite(theta)) {
            throw Error(ErrorCode::NonFinite, "gate angle is not finite");
        }
    };
    std::vector<int> open_oracles;
    for (const Gate &gate : circuit.gates) {
        const std::vector<int> support = gate_support(gate);
        for (int q : support) {
            check_qubit(q);
        }
        std::set<int> distinct(support.begin(), support.end());
        if (distinct.size() != support.size()) {
            throw Error(ErrorCode::InvalidInput, gate_kind(gate) + " repeats a qubit");
        }
        std::visit(overloaded{
                       [&](const Phase &g) { check_angle(g.theta); },
                       [&](const MultiControlledPhase &g) { check_angle(g.theta); },
                       [&](const AncillaPhaseRamp &g) {
                           check_angle(g.t);
                           check_angle(g.value_scale);
                       },
                       [&](const OracleCompute &g) {
                           if (g.oracle_id < 0 || g.oracle_id >= static_cast<int>(circuit.oracles.size())) {
                               throw Error(ErrorCode::IndexOutOfRange, "unknown oracle id");
                           }
                           if (circuit.oracles[g.oracle_id].width() != g.ancilla.size) {
                               throw Error(ErrorCode::WidthMismatch, "oracle ancilla width mismatch");
                           }
                           open_oracles.push_back(g.oracle_id);
                       },
                       [&](const OracleUncompute &g) {
                           if (open_oracles.empty() || open_oracles.back() != g.oracle_id) {
                               throw Error(ErrorCode::InvalidInput, "oracle uncompute without matching compute");
                           }
                           open_oracles.pop_back();
                       },
                       [](const auto &) {},
                   },
                   gate);
    }
    if (!open_oracles.empty()) {
        throw Error(ErrorCode::InvalidInput, "oracle compute left without uncompute");
    }
}

CircuitStats circuit_stats(const Circuit &circuit) {
    CircuitStats stats;
    stats.width = circuit.width();
    std::vector<int> layer(static_cast<std::size_t>(std::max(0, circuit.width())), 0);
    for (const Gate &gate : circuit.gates) {
        ++stats.counts[gate_kind(gate)];
        ++stats.total;
        if (const auto *mcp = std::get_if<MultiControlledPhase>(&gate)) {
            ++stats.controlled_phase_by_controls[static_cast<int>(mcp->controls.size())];
        }
        const std::vector<int> support = gate_support(gate);
        if (support.empty()) {
            continue;
        }
        int start = 0;
        for (int q : support) {
            start = std::max(start, layer[q]);
        }
        for (int q : support) {
            layer[q] = start + 1;
        }
        stats.depth = std::max(stats.depth, start + 1);
    }
    return stats;
}

Circuit inverse(const Circuit &circuit) {
    Circuit out;
    out.n_data = circuit.n_data;
    out.n_ancilla = circuit.n_ancilla;
    out.oracles = circuit.oracles;
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        out.gates.push_back(std::visit(overloaded{
                                           [](Phase g) -> Gate {
                                               g.theta = -g.theta;
                                               return g;
                                           },
                                           [](MultiControlledPhase g) -> Gate {
                                               g.theta = -g.theta;
                                               return g;
                                           },
                                           [](AncillaPhaseRamp g) -> Gate {
                                               g.t = -g.t;
                                               return g;
                                           },
                                           [](const OracleCompute &g) -> Gate {
                                               return OracleUncompute{g.data, g.ancilla, g.oracle_id};
                                           },
                                           [](const OracleUncompute &g) -> Gate {
                                               return OracleCompute{g.data, g.ancilla, g.oracle_id};
                                           },
                                           [](const auto &g) -> Gate { return g; },
                                       },
                                       *it));
    }
    return out;
}

} // namespace qwalk
