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
#include <optional>
#include <string>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk {

/// Circulant graph on N vertices. Row j of the weight matrix is the first row
/// right-rotated j times; the walk Hamiltonian is gamma times that matrix.
class CirculantGraph {
  public:
    CirculantGraph(RVector first_row, double gamma);

    int n_vertices() const { return static_cast<int>(first_row_.size()); }
    const RVector &first_row() const { return first_row_; }
    double gamma() const { return gamma_; }

    /// Entry (j, k) of the weight matrix (without gamma).
    double weight(int j, int k) const {
        const int n = n_vertices();
        return first_row_[((k - j) % n + n) % n];
    }

  private:
    RVector first_row_;
    double gamma_;
};

enum class GraphKind {
    Complete,
    CompleteNoLoops,
    Cycle,
    MoebiusLadder,
    CompleteBipartite,
    Paley,
};

std::optional<GraphKind> parse_graph_kind(const std::string &name);
std::string graph_kind_name(GraphKind kind);

/// Grouping tolerance for distinct eigenvalues.
inline constexpr double kDefaultGroupingTol = 1e-9;
/// Imaginary residue separating float noise from an asymmetric row.
inline constexpr double kImagResidueTol = 1e-10;

struct EigenvalueGroup {
    double value = 0.0;
    std::vector<int> indices;
};

/// Eigenvalues in Fourier order m = 0..N-1, plus distinct-value groups.
struct Spectrum {
    RVector eigenvalues;
    std::vector<EigenvalueGroup> groups;

    int size() const { return static_cast<int>(eigenvalues.size()); }
    /// Groups whose value is nonzero under the grouping tolerance.
    int nonzero_group_count(double tol = kDefaultGroupingTol) const;
};

/// Per-index eigenvalue function built from the nonzero positions of the
/// first row. Independent of the FFT route used by spectrum().
class EigenvalueOracle {
  public:
    EigenvalueOracle(int n_vertices, std::vector<int> support, std::vector<double> weights,
                     double gamma, std::optional<std::string> closed_form_tag);

    int n_vertices() const { return n_; }
    const std::vector<int> &support() const { return support_; }
    const std::vector<double> &weights() const { return weights_; }
    double gamma() const { return gamma_; }
    const std::optional<std::string> &closed_form_tag() const { return tag_; }

    /// Real eigenvalue at Fourier index x; uses the closed form when tagged.
    double evaluate(std::int64_t x) const;
    /// Full complex sum over the support, before the real part is taken.
    Complex evaluate_complex(std::int64_t x) const;

  private:
    int n_;
    std::vector<int> support_;
    std::vector<double> weights_;
    double gamma_;
    std::optional<std::string> tag_;
};

CirculantGraph circulant_from_row(const RVector &first_row, double gamma = 1.0);
CirculantGraph circulant_from_row(const std::vector<double> &first_row, double gamma = 1.0);

/// Size parameter meaning depends on kind: N for complete/cycle/moebius,
/// part size m for complete_bipartite (2m vertices), prime p for paley.
CirculantGraph standard_graph(GraphKind kind, int size, double gamma = 1.0);

Spectrum spectrum(const CirculantGraph &graph, double grouping_tol = kDefaultGroupingTol);

/// Eigenvalues alone (no grouping), O(N log N) via FFT of the first row.
RVector circulant_eigenvalues(const CirculantGraph &graph);

/// Transitive-closure grouping of values; groups ordered by smallest index.
std::vector<EigenvalueGroup> group_eigenvalues(const RVector &values, double tol);

EigenvalueOracle eigenvalue_oracle(const CirculantGraph &graph);

inline constexpr int kMaxDenseVertices = 1 << 14;

/// Weight matrix scaled by nothing; multiply by gamma for the Hamiltonian.
RMatrix adjacency_matrix(const CirculantGraph &graph);

/// gamma * adjacency_matrix(graph).
RMatrix hamiltonian(const CirculantGraph &graph);

/// True when every off-diagonal weight is equal: the graph is complete up to
/// a diagonal shift c_0 - c_1.
bool is_complete(const CirculantGraph &graph);

} // namespace qwalk
