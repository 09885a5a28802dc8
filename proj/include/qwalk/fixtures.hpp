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
#include <map>
#include <string>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

inline constexpr int kK4States = 6;
inline constexpr int kK4Times = 9;
inline constexpr int kK4Vertices = 4;

/// One cell of the published K4 tables. Time is time_eighths * pi / 8.
struct Table1Cell {
    int initial_state_id = 0;
    int time_eighths = 0;
    int vertex = 0;
    double p_ideal = 0.0;
    double p_exp = 0.0;
};

struct OutputStateFixture {
    std::string name;
    int initial_state_id = 0;
    int time_eighths = 0;
    int printed_decimals = 0;
    CVector amplitudes;
};

struct DensityFixture {
    std::string name;
    int initial_state_id = 0;
    int time_eighths = 0;
    double reported_fidelity = 0.0;
    /// Entries exactly as published.
    CMatrix printed;
    /// Published entries with the recorded errata applied.
    CMatrix corrected;
};

struct K4Fixtures {
    RVector first_row;
    double gamma = 1.0;
    std::map<int, CVector> initial_states;
    std::vector<Table1Cell> table;
    std::vector<double> reported_f_average;
    std::vector<OutputStateFixture> output_states;
    std::vector<DensityFixture> densities;

    CirculantGraph graph() const { return circulant_from_row(first_row, gamma); }
    RVector ideal_row(int initial_state_id, int time_eighths) const;
    RVector exp_row(int initial_state_id, int time_eighths) const;
};

inline double time_from_eighths(int time_eighths) { return time_eighths * kPi / 8.0; }

std::filesystem::path default_fixture_dir();

/// Reads k4_table1.csv, k4_experiment.json and k4_density.json. The table
/// must hold every (state, time, vertex) cell exactly once.
K4Fixtures load_k4_fixtures(const std::filesystem::path &dir = default_fixture_dir());

std::vector<Table1Cell> parse_table1_csv(const std::string &text);

} // namespace qwalk
