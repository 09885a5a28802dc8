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


#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qwalk/io.hpp"

namespace qwalk {

using nlohmann::json;

namespace {

json parse_json(const std::string &text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidInput, std::string(what) + ": " + e.what());
    }
}

int family_size(const json &params) {
    for (const char *key : {"n", "p", "m", "size"}) {
        if (params.contains(key)) {
            return params.at(key).get<int>();
        }
    }
    throw Error(ErrorCode::InvalidInput, "graph params need one of n, p, m, size");
}

} // namespace

CirculantGraph parse_graph_spec(const std::string &json_text) {
    const json spec = parse_json(json_text, "graph spec");
    try {
        const double gamma = spec.value("gamma", 1.0);
        if (spec.contains("kind")) {
            const std::string name = spec.at("kind").get<std::string>();
            const auto kind = parse_graph_kind(name);
            if (!kind) {
                throw Error(ErrorCode::InvalidInput, "unknown graph kind '" + name + "'");
            }
            return standard_graph(*kind, family_size(spec.value("params", spec)), gamma);
        }
        if (!spec.contains("row")) {
            throw Error(ErrorCode::InvalidInput, "graph spec needs \"row\" or \"kind\"");
        }
        const auto row = spec.at("row").get<std::vector<double>>();
        if (spec.contains("n") && spec.at("n").get<std::size_t>() != row.size()) {
            throw Error(ErrorCode::InvalidInput, "\"n\" does not match the row length");
        }
        return circulant_from_row(row, gamma);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidInput, std::string("graph spec: ") + e.what());
    }
}

CirculantGraph load_graph_spec(const std::filesystem::path &path) { return parse_graph_spec(read_text_file(path)); }

std::string spectrum_csv(const Spectrum &spectrum) {
    std::ostringstream out;
    out << "m,lambda\n";
    for (int m = 0; m < spectrum.size(); ++m) {
        out << m << ',' << format_double(spectrum.eigenvalues[m]) << '\n';
    }
    return out.str();
}

std::string spectrum_json(const CirculantGraph &graph, const Spectrum &spectrum) {
    json groups = json::array();
    for (const EigenvalueGroup &g : spectrum.groups) {
        groups.push_back({{"value", g.value}, {"multiplicity", g.indices.size()}, {"indices", g.indices}});
    }
    const RVector &row = graph.first_row();
    json out = {
        {"schema_version", kSchemaVersion},
        {"n", graph.n_vertices()},
        {"gamma", graph.gamma()},
        {"row", std::vector<double>(row.data(), row.data() + row.size())},
        {"eigenvalues", std::vector<double>(spectrum.eigenvalues.data(),
                                            spectrum.eigenvalues.data() + spectrum.eigenvalues.size())},
        {"groups", groups},
        {"nonzero_group_count", spectrum.nonzero_group_count()},
    };
    return out.dump(2) + "\n";
}

} // namespace qwalk
