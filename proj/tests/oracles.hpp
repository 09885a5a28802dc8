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


// Independent reference computations for the test suites. Nothing here calls
// the library's spectral or evolution code.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// A(j, k) = c[(k - j) mod N] by explicit rotation.
inline RMatrix circulant_matrix(const std::vector<double> &row) {
    const int n = static_cast<int>(row.size());
    RMatrix a(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            a(j, k) = row[static_cast<std::size_t>(((k - j) % n + n) % n)];
        }
    }
    return a;
}

/// gamma * sum_k c_k cos(2 pi m k / N) by direct O(N^2) summation.
inline std::vector<double> direct_eigenvalues(const std::vector<double> &row, double gamma) {
    const int n = static_cast<int>(row.size());
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            const long long mk = (static_cast<long long>(m) * k) % n;
            s += row[static_cast<std::size_t>(k)] * std::cos(2.0 * kPi * static_cast<double>(mk) / n);
        }
        out[static_cast<std::size_t>(m)] = gamma * s;
    }
    return out;
}

/// Q_jk = omega^{jk} / sqrt(N), omega = exp(2 pi i / N).
inline CMatrix dft_matrix(int n) {
    CMatrix q(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const long long jk = (static_cast<long long>(j) * k) % n;
            q(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), 2.0 * kPi * static_cast<double>(jk) / n);
        }
    }
    return q;
}

/// exp(-i t gamma A) by Pade scaling and squaring.
inline CMatrix propagator(const std::vector<double> &row, double gamma, double t) {
    const CMatrix h = (gamma * circulant_matrix(row)).cast<Complex>();
    return (Complex(0.0, -t) * h).exp();
}

inline CVector evolve(const std::vector<double> &row, double gamma, double t, const CVector &psi) {
    return propagator(row, gamma, t) * psi;
}

/// Symmetric row c_j = c_{N-j} with weights in [-1, 1] and random sparsity.
inline std::vector<double> random_symmetric_row(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> w(-1.0, 1.0);
    std::bernoulli_distribution keep(0.6);
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    row[0] = keep(rng) ? w(rng) : 0.0;
    for (int j = 1; j <= n / 2; ++j) {
        const double v = keep(rng) ? w(rng) : 0.0;
        row[static_cast<std::size_t>(j)] = v;
        row[static_cast<std::size_t>(n - j)] = v;
    }
    return row;
}

inline CVector random_state(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CVector v(dim);
    for (int i = 0; i < dim; ++i) {
        v[i] = {g(rng), g(rng)};
    }
    return v / v.norm();
}

/// |<a|b>|^2 written out as a loop.
inline double overlap(const CVector &a, const CVector &b) {
    Complex s{0.0, 0.0};
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return std::norm(s);
}

/// Multiset comparison after sorting.
inline double max_sorted_diff(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

/// exp(i theta) on basis state 0 of H^n D H^n by explicit matrices.
inline double hdh_zero_probability(const std::vector<double> &theta) {
    const int dim = static_cast<int>(theta.size());
    CMatrix h = CMatrix::Ones(1, 1);
    const CMatrix h1 = (CMatrix(2, 2) << 1, 1, 1, -1).finished() / std::sqrt(2.0);
    while (h.rows() < dim) {
        CMatrix next(h.rows() * 2, h.cols() * 2);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                next.block(r * h.rows(), c * h.cols(), h.rows(), h.cols()) = h1(r, c) * h;
            }
        }
        h = next;
    }
    CVector d(dim);
    for (int x = 0; x < dim; ++x) {
        d[x] = std::polar(1.0, theta[static_cast<std::size_t>(x)]);
    }
    const CMatrix u = h * d.asDiagonal() * h;
    return std::norm(u(0, 0));
}

} // namespace oracle
