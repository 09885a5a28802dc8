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


#include "qwalk/fixtures.hpp"

#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "qwalk/io.hpp"

#ifndef QWALK_DATA_DIR
#define QWALK_DATA_DIR "data"
#endif

namespace qwalk {

using nlohmann::json;

namespace {

CVector complex_vector(const json &j) {
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) {
        throw Error(ErrorCode::LengthMismatch, "fixture vector re/im lengths differ");
    }
    CVector v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = {re[i], im[i]};
    }
    return v;
}

CMatrix complex_matrix(const json &j) {
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("im").get<std::vector<std::vector<double>>>();
    const auto rows = static_cast<Eigen::Index>(re.size());
    if (rows == 0 || im.size() != re.size()) {
        throw Error(ErrorCode::ShapeMismatch, "fixture matrix re/im shapes differ");
    }
    CMatrix m(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(re[r].size()) != rows || im[r].size() != re[r].size()) {
            throw Error(ErrorCode::ShapeMismatch, "fixture matrix is not square");
        }
        for (Eigen::Index c = 0; c < rows; ++c) {
            m(r, c) = {re[r][c], im[r][c]};
        }
    }
    return m;
}

RVector table_row(const std::vector<Table1Cell> &table, int state, int te, bool ideal) {
    RVector row = RVector::Constant(kK4Vertices, std::nan(""));
    for (const Table1Cell &c : table) {
        if (c.initial_state_id == state && c.time_eighths == te) {
            row[c.vertex] = ideal ? c.p_ideal : c.p_exp;
        }
    }
    if (row.hasNaN()) {
        throw Error(ErrorCode::InvalidInput,
                    "no table row for state " + std::to_string(state) + " at " + std::to_string(te) + "/8 pi");
    }
    return row;
}

} // namespace

std::filesystem::path default_fixture_dir() { return QWALK_DATA_DIR; }

std::vector<Table1Cell> parse_table1_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("initial_state_id,time_eighths,vertex,p_ideal,p_exp", 0) != 0) {
        throw Error(ErrorCode::InvalidInput, "table CSV header mismatch");
    }
    std::vector<Table1Cell> cells;
    std::set<std::tuple<int, int, int>> seen;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        std::istringstream fields(line);
        std::string f[5];
        for (auto &field : f) {
            std::getline(fields, field, ',');
        }
        Table1Cell c;
        try {
            c = {std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2]), std::stod(f[3]), std::stod(f[4])};
        } catch (const std::exception &) {
            throw Error(ErrorCode::InvalidInput, "table CSV line " + std::to_string(line_no) + " is malformed");
        }
        if (c.initial_state_id < 1 || c.initial_state_id > kK4States || c.time_eighths < 0 ||
            c.time_eighths >= kK4Times || c.vertex < 0 || c.vertex >= kK4Vertices) {
            throw Error(ErrorCode::InvalidInput, "table CSV line " + std::to_string(line_no) + " is out of range");
        }
        if (!seen.insert({c.initial_state_id, c.time_eighths, c.vertex}).second) {
            throw Error(ErrorCode::InvalidInput, "table CSV line " + std::to_string(line_no) + " repeats a cell");
        }
        cells.push_back(c);
    }
    if (cells.size() != static_cast<std::size_t>(kK4States * kK4Times * kK4Vertices)) {
        throw Error(ErrorCode::InvalidInput, "table CSV holds " + std::to_string(cells.size()) + " cells, expected " +
                                                 std::to_string(kK4States * kK4Times * kK4Vertices));
    }
    return cells;
}

RVector K4Fixtures::ideal_row(int initial_state_id, int time_eighths) const {
    return table_row(table, initial_state_id, time_eighths, true);
}

RVector K4Fixtures::exp_row(int initial_state_id, int time_eighths) const {
    return table_row(table, initial_state_id, time_eighths, false);
}

K4Fixtures load_k4_fixtures(const std::filesystem::path &dir) {
    K4Fixtures fx;
    fx.table = parse_table1_csv(read_text_file(dir / "k4_table1.csv"));
    try {
        const json exp = json::parse(read_text_file(dir / "k4_experiment.json"));
        const auto row = exp.at("first_row").get<std::vector<double>>();
        fx.first_row = Eigen::Map<const RVector>(row.data(), static_cast<Eigen::Index>(row.size()));
        fx.gamma = exp.value("gamma", 1.0);
        for (const json &s : exp.at("initial_states")) {
            fx.initial_states[s.at("id").get<int>()] = complex_vector(s);
        }
        fx.reported_f_average = exp.at("reported_f_average").get<std::vector<double>>();
        for (const json &s : exp.at("output_states")) {
            fx.output_states.push_back({s.at("name").get<std::string>(), s.at("initial_state_id").get<int>(),
                                        s.at("time_eighths").get<int>(), s.value("printed_decimals", 4),
                                        complex_vector(s)});
        }

        const json dens = json::parse(read_text_file(dir / "k4_density.json"));
        for (const json &m : dens.at("matrices")) {
            DensityFixture d;
            d.name = m.at("name").get<std::string>();
            d.initial_state_id = m.at("initial_state_id").get<int>();
            d.time_eighths = m.at("time_eighths").get<int>();
            d.reported_fidelity = m.at("reported_fidelity").get<double>();
            d.printed = complex_matrix(m);
            d.corrected = d.printed;
            for (const json &e : m.value("errata", json::array())) {
                const auto r = e.at("row").get<Eigen::Index>();
                const auto c = e.at("col").get<Eigen::Index>();
                if (r < 0 || c < 0 || r >= d.corrected.rows() || c >= d.corrected.cols()) {
                    throw Error(ErrorCode::IndexOutOfRange, "erratum outside " + d.name);
                }
                const double v = e.at("corrected").get<double>();
                const std::string part = e.at("part").get<std::string>();
                if (part == "re") {
                    d.corrected(r, c).real(v);
                } else if (part == "im") {
                    d.corrected(r, c).imag(v);
                } else {
                    throw Error(ErrorCode::InvalidInput, "erratum part must be re or im");
                }
            }
            fx.densities.push_back(std::move(d));
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidInput, std::string("fixture JSON: ") + e.what());
    }
    if (static_cast<int>(fx.initial_states.size()) != kK4States ||
        static_cast<int>(fx.reported_f_average.size()) != kK4States) {
        throw Error(ErrorCode::InvalidInput, "fixtures need six initial states and six reported fidelities");
    }
    return fx;
}

} // namespace qwalk
