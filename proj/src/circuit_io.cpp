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


#include <sstream>

#include <json.hpp>

#include "qwalk/compiler.hpp"
#include "qwalk/detail/overloaded.hpp"
#include "qwalk/io.hpp"

namespace qwalk {

using nlohmann::json;
using detail::overloaded;

namespace {

json range_json(const QubitRange &r) { return json::array({r.first, r.size}); }

QubitRange range_from(const json &j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

json gate_json(const Gate &gate) {
    json g = {{"kind", gate_kind(gate)}};
    std::visit(overloaded{
                   [&](const Hadamard &h) { g["targets"] = {h.target}; },
                   [&](const PauliX &x) { g["targets"] = {x.target}; },
                   [&](const Phase &p) {
                       g["targets"] = {p.target};
                       g["theta"] = p.theta;
                   },
                   [&](const MultiControlledPhase &m) {
                       g["targets"] = m.target ? json::array({*m.target}) : json::array();
                       json controls = json::array();
                       for (const Control &c : m.controls) {
                           controls.push_back({c.qubit, c.polarity == Polarity::IfOne ? 1 : 0});
                       }
                       g["controls"] = controls;
                       g["theta"] = m.theta;
                   },
                   [&](const Swap &s) { g["targets"] = {s.a, s.b}; },
                   [&](const OracleCompute &o) {
                       g["data"] = range_json(o.data);
                       g["ancilla"] = range_json(o.ancilla);
                       g["oracle"] = o.oracle_id;
                   },
                   [&](const OracleUncompute &o) {
                       g["data"] = range_json(o.data);
                       g["ancilla"] = range_json(o.ancilla);
                       g["oracle"] = o.oracle_id;
                   },
                   [&](const AncillaPhaseRamp &r) {
                       g["ancilla"] = range_json(r.ancilla);
                       g["t"] = r.t;
                       g["value_scale"] = r.value_scale;
                   },
               },
               gate);
    return g;
}

Gate gate_from(const json &g) {
    const std::string kind = g.at("kind").get<std::string>();
    auto target = [&](std::size_t i) { return g.at("targets").at(i).get<int>(); };
    if (kind == "hadamard") return Hadamard{target(0)};
    if (kind == "pauli_x") return PauliX{target(0)};
    if (kind == "phase") return Phase{target(0), g.at("theta").get<double>()};
    if (kind == "swap") return Swap{target(0), target(1)};
    if (kind == "multi_controlled_phase") {
        MultiControlledPhase m;
        for (const json &c : g.value("controls", json::array())) {
            m.controls.push_back({c.at(0).get<int>(), c.at(1).get<int>() != 0 ? Polarity::IfOne : Polarity::IfZero});
        }
        const json targets = g.value("targets", json::array());
        if (!targets.empty()) {
            m.target = targets.at(0).get<int>();
        }
        m.theta = g.at("theta").get<double>();
        return m;
    }
    if (kind == "oracle_compute") {
        return OracleCompute{range_from(g.at("data")), range_from(g.at("ancilla")), g.at("oracle").get<int>()};
    }
    if (kind == "oracle_uncompute") {
        return OracleUncompute{range_from(g.at("data")), range_from(g.at("ancilla")), g.at("oracle").get<int>()};
    }
    if (kind == "ancilla_phase_ramp") {
        return AncillaPhaseRamp{range_from(g.at("ancilla")), g.at("t").get<double>(), g.at("value_scale").get<double>()};
    }
    throw Error(ErrorCode::InvalidInput, "unknown gate kind '" + kind + "'");
}

json oracle_json(const FixedPointOracle &f) {
    const EigenvalueOracle &o = f.oracle;
    json j = {
        {"n_vertices", o.n_vertices()}, {"support", o.support()}, {"weights", o.weights()},
        {"gamma", o.gamma()},           {"k_int", f.k_int},       {"k_frac", f.k_frac},
    };
    j["closed_form_tag"] = o.closed_form_tag() ? json(*o.closed_form_tag()) : json(nullptr);
    return j;
}

FixedPointOracle oracle_from(const json &j) {
    std::optional<std::string> tag;
    if (j.contains("closed_form_tag") && !j.at("closed_form_tag").is_null()) {
        tag = j.at("closed_form_tag").get<std::string>();
    }
    EigenvalueOracle o(j.at("n_vertices").get<int>(), j.at("support").get<std::vector<int>>(),
                       j.at("weights").get<std::vector<double>>(), j.at("gamma").get<double>(), tag);
    return FixedPointOracle{std::move(o), j.at("k_int").get<int>(), j.at("k_frac").get<int>()};
}

} // namespace

std::string circuit_to_json(const Circuit &circuit) {
    json gates = json::array();
    for (const Gate &g : circuit.gates) {
        gates.push_back(gate_json(g));
    }
    json oracles = json::array();
    for (const FixedPointOracle &f : circuit.oracles) {
        oracles.push_back(oracle_json(f));
    }
    json out = {
        {"schema_version", kSchemaVersion},
        {"n_data", circuit.n_data},
        {"n_ancilla", circuit.n_ancilla},
        {"gates", gates},
        {"oracles", oracles},
    };
    return out.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string &json_text) {
    Circuit c;
    try {
        const json in = json::parse(json_text);
        c.n_data = in.at("n_data").get<int>();
        c.n_ancilla = in.value("n_ancilla", 0);
        for (const json &g : in.at("gates")) {
            c.gates.push_back(gate_from(g));
        }
        for (const json &o : in.value("oracles", json::array())) {
            c.oracles.push_back(oracle_from(o));
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidInput, std::string("circuit file: ") + e.what());
    }
    validate(c);
    return c;
}

std::string circuit_to_qasm(const Circuit &circuit) {
    if (circuit.has_oracle_gates()) {
        throw Error(ErrorCode::Unsupported, "circuits with oracle gates have no OpenQASM export");
    }
    const Circuit lowered = lower_multicontrolled(circuit);
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << lowered.width() << "];\n";
    auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
    for (const Gate &gate : lowered.gates) {
        std::visit(overloaded{
                       [&](const Hadamard &h) { out << "h " << q(h.target) << ";\n"; },
                       [&](const PauliX &x) { out << "x " << q(x.target) << ";\n"; },
                       [&](const Phase &p) { out << "u1(" << format_double(p.theta) << ") " << q(p.target) << ";\n"; },
                       [&](const Swap &s) { out << "swap " << q(s.a) << "," << q(s.b) << ";\n"; },
                       [&](const MultiControlledPhase &m) {
                           if (m.controls.size() != 1 || !m.target || m.controls[0].polarity != Polarity::IfOne) {
                               throw Error(ErrorCode::Unsupported, "unlowered multi-controlled phase");
                           }
                           out << "cu1(" << format_double(m.theta) << ") " << q(m.controls[0].qubit) << ","
                               << q(*m.target) << ";\n";
                       },
                       [&](const auto &) { throw Error(ErrorCode::Unsupported, "gate has no OpenQASM form"); },
                   },
                   gate);
    }
    return out.str();
}

} // namespace qwalk
