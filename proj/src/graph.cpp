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

#include "qwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <unsupported/Eigen/FFT>

namespace qwalk {

const char *error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::NonRealSpectrum: return "NonRealSpectrum";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::WidthExceeded: return "WidthExceeded";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::RangeOverflow: return "RangeOverflow";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroExact: return "ZeroExact";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

namespace {

constexpr double kSymmetryTol = 1e-12;

// Reduced phase angle 2*pi*(a*b mod n)/n, exact in the integer part.
double fourier_angle(std::int64_t a, std::int64_t b, std::int64_t n) {
    const std::int64_t r = ((a % n) * (b % n)) % n;
    return 2.0 * kPi * static_cast<double>((r + n) % n) / static_cast<double>(n);
}

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

CirculantGraph::CirculantGraph(RVector first_row, double gamma)
    : first_row_(std::move(first_row)), gamma_(gamma) {
    const Eigen::Index n = first_row_.size();
    if (n == 0) {
        throw Error(ErrorCode::EmptyRow, "first row has length 0");
    }
    if (!first_row_.allFinite()) {
        throw Error(ErrorCode::NonFinite, "first row contains a non-finite weight");
    }
    if (!std::isfinite(gamma_)) {
        throw Error(ErrorCode::NonFinite, "gamma is not finite");
    }
    if (gamma_ == 0.0) {
        throw Error(ErrorCode::InvalidInput, "gamma must be nonzero");
    }
    for (Eigen::Index j = 1; j < n; ++j) {
        if (std::abs(first_row_[j] - first_row_[n - j]) > kSymmetryTol) {
            std::ostringstream msg;
            msg << "c_" << j << " = " << first_row_[j] << " differs from c_" << (n - j) << " = "
                << first_row_[n - j];
            throw Error(ErrorCode::SymmetryViolation, msg.str());
        }
    }
}

std::optional<GraphKind> parse_graph_kind(const std::string &name) {
    if (name == "complete") return GraphKind::Complete;
    if (name == "complete_no_loops") return GraphKind::CompleteNoLoops;
    if (name == "cycle") return GraphKind::Cycle;
    if (name == "moebius_ladder" || name == "mobius_ladder") return GraphKind::MoebiusLadder;
    if (name == "complete_bipartite") return GraphKind::CompleteBipartite;
    if (name == "paley") return GraphKind::Paley;
    return std::nullopt;
}

std::string graph_kind_name(GraphKind kind) {
    switch (kind) {
    case GraphKind::Complete: return "complete";
    case GraphKind::CompleteNoLoops: return "complete_no_loops";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::MoebiusLadder: return "moebius_ladder";
    case GraphKind::CompleteBipartite: return "complete_bipartite";
    case GraphKind::Paley: return "paley";
    }
    return "unknown";
}

CirculantGraph circulant_from_row(const RVector &first_row, double gamma) {
    return CirculantGraph(first_row, gamma);
}

CirculantGraph circulant_from_row(const std::vector<double> &first_row, double gamma) {
    RVector row(static_cast<Eigen::Index>(first_row.size()));
    std::copy(first_row.begin(), first_row.end(), row.begin());
    return CirculantGraph(std::move(row), gamma);
}

CirculantGraph standard_graph(GraphKind kind, int size, double gamma) {
    auto invalid = [&](const std::string &why) {
        return Error(ErrorCode::InvalidSize, graph_kind_name(kind) + ": " + why);
    };
    RVector row;
    switch (kind) {
    case GraphKind::Complete:
    case GraphKind::CompleteNoLoops:
        if (size < 1) {
            throw invalid("N must be at least 1, got " + std::to_string(size));
        }
        row = RVector::Ones(size);
        if (kind == GraphKind::CompleteNoLoops) {
            row[0] = 0.0;
        }
        break;
    case GraphKind::Cycle:
        if (size < 3) {
            throw invalid("N must be at least 3, got " + std::to_string(size));
        }
        row = RVector::Zero(size);
        row[1] = 1.0;
        row[size - 1] = 1.0;
        break;
    case GraphKind::MoebiusLadder:
        if (size < 4 || size % 2 != 0) {
            throw invalid("N must be even and at least 4, got " + std::to_string(size));
        }
        row = RVector::Zero(size);
        row[1] = 1.0;
        row[size - 1] = 1.0;
        row[size / 2] = 1.0;
        break;
    case GraphKind::CompleteBipartite:
        // K_{m,m} on 2m vertices: odd offsets connect the two parts.
        if (size < 1) {
            throw invalid("part size m must be at least 1, got " + std::to_string(size));
        }
        row = RVector::Zero(2 * size);
        for (int k = 1; k < 2 * size; k += 2) {
            row[k] = 1.0;
        }
        break;
    case GraphKind::Paley:
        if (!is_prime(size) || size % 4 != 1) {
            throw invalid("p must be a prime with p = 1 mod 4, got " + std::to_string(size));
        }
        row = RVector::Zero(size);
        for (std::int64_t k = 1; k < size; ++k) {
            row[static_cast<Eigen::Index>((k * k) % size)] = 1.0;
        }
        break;
    }
    return CirculantGraph(std::move(row), gamma);
}

int Spectrum::nonzero_group_count(double tol) const {
    return static_cast<int>(std::count_if(groups.begin(), groups.end(),
                                          [tol](const EigenvalueGroup &g) { return std::abs(g.value) > tol; }));
}

std::vector<EigenvalueGroup> group_eigenvalues(const RVector &values, double tol) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });

    std::vector<EigenvalueGroup> groups;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || values[order[i]] - values[order[i - 1]] > tol) {
            groups.emplace_back();
        }
        groups.back().indices.push_back(order[i]);
    }
    for (auto &g : groups) {
        std::sort(g.indices.begin(), g.indices.end());
        double sum = 0.0;
        for (int idx : g.indices) {
            sum += values[idx];
        }
        g.value = sum / static_cast<double>(g.indices.size());
    }
    std::sort(groups.begin(), groups.end(),
              [](const EigenvalueGroup &a, const EigenvalueGroup &b) { return a.indices.front() < b.indices.front(); });
    return groups;
}

RVector circulant_eigenvalues(const CirculantGraph &graph) {
    const int n = graph.n_vertices();
    // lambda_m = gamma * sum_k c_k exp(-2 pi i m k / N): the forward DFT of the row.
    CVector row = graph.first_row().cast<Complex>();
    CVector freq(n);
    if (n == 1) {
        // kissfft cannot plan a length-1 transform; it is the identity.
        freq = row;
    } else {
        Eigen::FFT<double> fft;
        fft.fwd(freq, row);
    }

    RVector values(n);
    // FFT rounding grows with the row's magnitude, so the residue check is relative.
    const double scale = std::max(1.0, std::abs(graph.gamma()) * graph.first_row().cwiseAbs().sum());
    for (int m = 0; m < n; ++m) {
        const Complex lambda = graph.gamma() * freq[m];
        if (std::abs(lambda.imag()) > kImagResidueTol * scale) {
            std::ostringstream msg;
            msg << "imaginary residue " << lambda.imag() << " at m = " << m;
            throw Error(ErrorCode::NonRealSpectrum, msg.str());
        }
        values[m] = lambda.real();
    }
    // Symmetric rows give lambda_m == lambda_{N-m}; remove FFT rounding asymmetry.
    for (int m = 1; m < n - m; ++m) {
        const double avg = 0.5 * (values[m] + values[n - m]);
        values[m] = avg;
        values[n - m] = avg;
    }
    return values;
}

Spectrum spectrum(const CirculantGraph &graph, double grouping_tol) {
    Spectrum out;
    out.eigenvalues = circulant_eigenvalues(graph);
    out.groups = group_eigenvalues(out.eigenvalues, grouping_tol);
    return out;
}

EigenvalueOracle::EigenvalueOracle(int n_vertices, std::vector<int> support, std::vector<double> weights,
                                   double gamma, std::optional<std::string> closed_form_tag)
    : n_(n_vertices), support_(std::move(support)), weights_(std::move(weights)), gamma_(gamma),
      tag_(std::move(closed_form_tag)) {
    if (support_.size() != weights_.size()) {
        throw Error(ErrorCode::LengthMismatch, "oracle support and weights differ in length");
    }
}

Complex EigenvalueOracle::evaluate_complex(std::int64_t x) const {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < support_.size(); ++i) {
        sum += weights_[i] * std::polar(1.0, fourier_angle(x, support_[i], n_));
    }
    return gamma_ * sum;
}

double EigenvalueOracle::evaluate(std::int64_t x) const {
    if (tag_ == "cycle") {
        return gamma_ * 2.0 * weights_.front() * std::cos(fourier_angle(x, 1, n_));
    }
    if (tag_ == "complete") {
        // c_0 on the diagonal, a everywhere else: a*N*[x == 0] + (c_0 - a).
        const double a = weights_.back();
        const double c0 = support_.front() == 0 ? weights_.front() : 0.0;
        const double peak = (x % n_ == 0) ? a * n_ : 0.0;
        return gamma_ * (peak + c0 - a);
    }
    return evaluate_complex(x).real();
}

EigenvalueOracle eigenvalue_oracle(const CirculantGraph &graph) {
    const int n = graph.n_vertices();
    std::vector<int> support;
    std::vector<double> weights;
    for (int k = 0; k < n; ++k) {
        if (graph.first_row()[k] != 0.0) {
            support.push_back(k);
            weights.push_back(graph.first_row()[k]);
        }
    }
    std::optional<std::string> tag;
    if (n >= 3 && support.size() == 2 && support[0] == 1 && support[1] == n - 1) {
        tag = "cycle";
    } else if (is_complete(graph) && graph.first_row()[1] != 0.0) {
        tag = "complete";
    }
    return EigenvalueOracle(n, std::move(support), std::move(weights), graph.gamma(), std::move(tag));
}

RMatrix adjacency_matrix(const CirculantGraph &graph) {
    const int n = graph.n_vertices();
    if (n > kMaxDenseVertices) {
        throw Error(ErrorCode::TooLarge, "dense adjacency limited to N <= " + std::to_string(kMaxDenseVertices));
    }
    RMatrix a(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            a(j, k) = graph.weight(j, k);
        }
    }
    return a;
}

RMatrix hamiltonian(const CirculantGraph &graph) { return graph.gamma() * adjacency_matrix(graph); }

bool is_complete(const CirculantGraph &graph) {
    const RVector &c = graph.first_row();
    if (c.size() < 2) {
        return false;
    }
    for (Eigen::Index k = 2; k < c.size(); ++k) {
        if (c[k] != c[1]) {
            return false;
        }
    }
    return true;
}

} // namespace qwalk
