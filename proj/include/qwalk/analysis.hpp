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
#include <span>
#include <vector>

#include "qwalk/common.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/simulator.hpp"

namespace qwalk {

inline constexpr int kMaxDenseEvolutionVertices = 1 << 12;

// Classical reference evolutions. Both take raw amplitude vectors of any
// length N (not only powers of two) and return exp(-itH) applied to them.

/// Dense Hermitian eigendecomposition of H = gamma * A.
CVector dense_evolution(const CirculantGraph &graph, double t, const CVector &input);
StateVector dense_evolution(const CirculantGraph &graph, double t, const StateVector &input);

/// Dense exp(-itH) itself.
CMatrix dense_propagator(const CirculantGraph &graph, double t);

/// Diagonalization by FFT with the analytic spectrum, O(N log N).
CVector fft_evolution(const CirculantGraph &graph, double t, const CVector &input);
StateVector fft_evolution(const CirculantGraph &graph, double t, const StateVector &input);

/// |2^{-n} sum_x e^{i theta_x}|^2: the all-zeros probability of H D H on n
/// qubits with D = diag(e^{i theta_x}).
double p_d(const RVector &phases);
double p_d(const RVector &phases, int n);

struct MultiplicativeErrorReport {
    double epsilon = 0.0;
    bool satisfied_below_half = true;
};

MultiplicativeErrorReport multiplicative_error(double p_approx, double p_exact);

struct SwapTestResult {
    double overlap = 0.0;
    double p_one = 0.0;
    std::uint64_t shots_used = 0;
};

SwapTestResult swap_test_exact(const CVector &psi, const CVector &phi);
SwapTestResult swap_test_exact(const StateVector &psi, const StateVector &phi);

/// Bernoulli(p_one) draws; overlap estimate 1 - 2 * ones / shots in [0, 1].
SwapTestResult swap_test_sampled(const CVector &psi, const CVector &phi, std::uint64_t shots, std::uint64_t seed);
SwapTestResult swap_test_sampled(const StateVector &psi, const StateVector &phi, std::uint64_t shots,
                                 std::uint64_t seed);

/// |N^{-1} sum_x e^{i theta_x} e^{i theta~_x}|^2 by the full sum.
double classical_swap_exact(const RVector &phases, const RVector &phases_tilde);

/// Same quantity averaged over `samples` uniformly drawn x.
double classical_swap_estimate(const RVector &phases, const RVector &phases_tilde, std::uint64_t samples,
                               std::uint64_t seed);

/// sum_i sqrt(p_i q_i).
double bhattacharyya(const RVector &p, const RVector &q);

struct DistributionPair {
    Distribution ideal;
    Distribution observed;
};

/// Mean Bhattacharyya coefficient over the pairs; rows are used as given.
double average_distribution_fidelity(std::span<const DistributionPair> pairs);

struct DensityCheck {
    double hermiticity_defect = 0.0;
    double trace = 0.0;
    double min_eigenvalue = 0.0;
};

/// Published tomography matrices carry 4-decimal rounding, so validity uses
/// slack: Hermitian within 1e-6, trace within 2e-3 of 1, min eigenvalue
/// at least -5e-3.
class DensityMatrix {
  public:
    static constexpr double kHermiticityTol = 1e-6;
    static constexpr double kTraceTol = 2e-3;
    static constexpr double kMinEigenvalue = -5e-3;

    explicit DensityMatrix(CMatrix entries);

    /// Constructs without checks so defective data can be inspected.
    static DensityMatrix unchecked(CMatrix entries);

    Eigen::Index dim() const { return entries_.rows(); }
    const CMatrix &entries() const { return entries_; }
    DensityCheck check() const;
    bool valid() const;

  private:
    struct NoCheck {};
    DensityMatrix(CMatrix entries, NoCheck) : entries_(std::move(entries)) {}

    CMatrix entries_;
};

struct DensityFidelity {
    /// <phi|rho|phi>
    double linear = 0.0;
    /// sqrt(<phi|rho|phi>)
    double sqrt = 0.0;
};

DensityFidelity density_fidelity(const DensityMatrix &rho, const CVector &phi);

} // namespace qwalk
