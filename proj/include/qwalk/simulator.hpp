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
#include <map>
#include <utility>
#include <vector>

#include "qwalk/circuit.hpp"
#include "qwalk/common.hpp"

namespace qwalk {

/// Dense amplitudes are limited to this many qubits.
inline constexpr int kMaxDenseQubits = 26;
/// circuit_unitary() is limited to this width.
inline constexpr int kMaxUnitaryQubits = 12;
/// Sparse states address basis indices in 63 bits.
inline constexpr int kMaxSparseQubits = 62;

/// Normalized dense state over n qubits, big-endian basis order.
class StateVector {
  public:
    StateVector() = default;
    /// Requires size 2^n_qubits and unit norm within 1e-10.
    StateVector(int n_qubits, CVector amplitudes);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dimension() const { return amplitudes_.size(); }
    const CVector &amplitudes() const { return amplitudes_; }
    Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }
    double norm() const { return amplitudes_.norm(); }

    /// In-place kernels need mutable access; callers keep the norm.
    CVector &mutable_amplitudes() { return amplitudes_; }

  private:
    int n_qubits_ = 0;
    CVector amplitudes_;
};

/// Sorted sparse amplitudes for registers too wide for dense storage. Exact
/// for any circuit; efficient while ancilla qubits stay classical.
class SparseState {
  public:
    using Entry = std::pair<std::uint64_t, Complex>;

    SparseState() = default;
    SparseState(int n_qubits, std::vector<Entry> entries);
    static SparseState from_dense(const StateVector &state, int extra_qubits = 0);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Entry> &entries() const { return entries_; }
    std::vector<Entry> &mutable_entries() { return entries_; }
    Complex amplitude(std::uint64_t index) const;
    double norm() const;
    /// Dense copy; requires n_qubits <= kMaxDenseQubits.
    StateVector to_dense() const;

  private:
    int n_qubits_ = 0;
    std::vector<Entry> entries_;
};

/// Probabilities p(x) indexed by outcome. Measured data (printed table rows)
/// may be stored unnormalized; simulator output is clamped and normalized.
struct Distribution {
    RVector probabilities;

    Eigen::Index n_outcomes() const { return probabilities.size(); }
    double operator[](Eigen::Index i) const { return probabilities[i]; }
};

/// Clamps float-noise negatives (>= -1e-12) to 0 and checks the sum.
Distribution make_distribution(RVector probabilities);

struct ShotCounts {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    std::uint64_t count(std::uint64_t outcome) const {
        auto it = counts.find(outcome);
        return it == counts.end() ? 0 : it->second;
    }
};

StateVector basis_state(std::uint64_t x, int width);

/// Normalizes amplitudes whose norm is within 1e-6 of 1 (or any nonzero norm
/// when `renormalize_any` is set). Length must be a power of two.
StateVector state_from_amplitudes(const CVector &amplitudes, bool renormalize_any = true);

/// In-place gate kernels on raw amplitude arrays (no normalization checks).
/// `oracles` resolves OracleCompute/OracleUncompute ids.
void apply_gate_inplace(CVector &amplitudes, int n_qubits, const Gate &gate,
                        const std::vector<FixedPointOracle> &oracles = {});
void apply_gate_inplace(SparseState &state, const Gate &gate, const std::vector<FixedPointOracle> &oracles = {});

StateVector apply_gate(const StateVector &state, const Gate &gate, const std::vector<FixedPointOracle> &oracles = {});

/// Runs a circuit on a dense state. An input covering only the data qubits
/// gets the ancilla register appended in |0...0>.
StateVector run(const Circuit &circuit, const StateVector &input);
SparseState run(const Circuit &circuit, const SparseState &input);

/// Linear action on an arbitrary amplitude vector (no normalization).
CVector run_raw(const Circuit &circuit, const CVector &amplitudes);

/// Dense when the circuit fits kMaxDenseQubits, sparse otherwise; returns the
/// data-register marginal either way.
Distribution run_distribution(const Circuit &circuit, const StateVector &data_input);

/// Marginal over the first n_data qubits.
Distribution probabilities(const StateVector &state, int n_data);
Distribution probabilities(const SparseState &state, int n_data);

/// Probability that the qubits after n_data all read zero.
double ancilla_zero_probability(const StateVector &state, int n_data);
double ancilla_zero_probability(const SparseState &state, int n_data);

/// Multinomial draws by inverse CDF on a SplitMix64 stream seeded with `seed`.
ShotCounts sample(const Distribution &dist, std::uint64_t shots, std::uint64_t seed);

CMatrix circuit_unitary(const Circuit &circuit);

/// |<a|b>|^2, insensitive to global phase.
template <typename DerivedA, typename DerivedB>
double phase_adjusted_fidelity(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    return std::norm(a.dot(b));
}

/// Max entrywise |A - e^{i phi} B| with phi chosen from the largest overlap.
template <typename DerivedA, typename DerivedB>
double max_diff_up_to_phase(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    const Complex overlap = (b.array().conjugate() * a.array()).sum();
    const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    return (a - phase * b).cwiseAbs().maxCoeff();
}

} // namespace qwalk
