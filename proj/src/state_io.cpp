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

#include "qwalk/io.hpp"

namespace qwalk {

using nlohmann::json;

std::string state_to_json(const StateVector &state) {
    const CVector &a = state.amplitudes();
    std::vector<double> re(a.size()), im(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        re[i] = a[i].real();
        im[i] = a[i].imag();
    }
    json out = {{"schema_version", kSchemaVersion}, {"n", state.n_qubits()}, {"re", re}, {"im", im}};
    return out.dump(2) + "\n";
}

StateVector state_from_json(const std::string &json_text) {
    try {
        const json in = json::parse(json_text);
        const auto re = in.at("re").get<std::vector<double>>();
        const auto im = in.value("im", std::vector<double>(re.size(), 0.0));
        if (re.size() != im.size()) {
            throw Error(ErrorCode::LengthMismatch, "state \"re\" and \"im\" lengths differ");
        }
        CVector amps(static_cast<Eigen::Index>(re.size()));
        for (std::size_t i = 0; i < re.size(); ++i) {
            amps[static_cast<Eigen::Index>(i)] = {re[i], im[i]};
        }
        StateVector state = state_from_amplitudes(amps);
        if (in.contains("n") && in.at("n").get<int>() != state.n_qubits()) {
            throw Error(ErrorCode::WidthMismatch, "state \"n\" does not match the amplitude count");
        }
        return state;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidInput, std::string("state file: ") + e.what());
    }
}

std::string distribution_csv(const Distribution &dist) {
    std::ostringstream out;
    out << "outcome,value\n";
    for (Eigen::Index x = 0; x < dist.n_outcomes(); ++x) {
        out << x << ',' << format_double(dist[x]) << '\n';
    }
    return out.str();
}

std::string counts_csv(const ShotCounts &counts) {
    std::ostringstream out;
    out << "outcome,value\n";
    for (const auto &[outcome, count] : counts.counts) {
        out << outcome << ',' << count << '\n';
    }
    return out.str();
}

} // namespace qwalk
