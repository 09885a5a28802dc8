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

#include "qwalk/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/detail/overloaded.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

using detail::overloaded;

constexpr double kNormTol = 1e-10;
constexpr double kNegativeProbabilityTol = 1e-12;
// Sparse entries below this squared magnitude are float residue of exact
// cancellation.
constexpr double kSparsePruneNorm2 = 1e-30;

std::uint64_t qubit_mask(int n_qubits, int qubit) { return std::uint64_t{1} << (n_qubits - 1 - qubit); }

std::uint64_t dim_of(int n_qubits) { return std::uint64_t{1} << n_qubits; }

// Value of a register (MSB first) inside a basis index.
std::uint64_t register_value(std::uint64_t index, int n_qubits, const QubitRange &r) {
    const int shift = n_qubits - r.first - r.size;
    return (index >> shift) & ((std::uint64_t{1} << r.size) - 1);
}

std::uint64_t register_shift(std::uint64_t value, int n_qubits, const QubitRange &r) {
    return value << (n_qubits - r.first - r.size);
}

void check_qubit(int q, int n_qubits) {
    if (q < 0 || q >= n_qubits) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "qubit " + std::to_string(q) + " outside width " + std::to_string(n_qubits));
    }
}

void check_gate(const Gate &gate, int n_qubits) {
    for (int q : gate_support(gate)) {
        check_qubit(q, n_qubits);
    }
}

struct ControlPattern {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

ControlPattern pattern_of(const MultiControlledPhase &g, int n_qubits) {
    ControlPattern p;
    for (const Control &c : g.controls) {
        const std::uint64_t m = qubit_mask(n_qubits, c.qubit);
        p.mask |= m;
        if (c.polarity == Polarity::IfOne) {
            p.value |= m;
        }
    }
    if (g.target) {
        const std::uint64_t m = qubit_mask(n_qubits, *g.target);
        p.mask |= m;
        p.value |= m;
    }
    return p;
}

const FixedPointOracle &lookup(const std::vector<FixedPointOracle> &oracles, int id) {
    if (id < 0 || id >= static_cast<int>(oracles.size())) {
        throw Error(ErrorCode::IndexOutOfRange, "oracle id " + std::to_string(id) + " not defined");
    }
    return oracles[static_cast<std::size_t>(id)];
}

std::vector<std::uint64_t> oracle_table(const FixedPointOracle &oracle, const QubitRange &data,
                                        const QubitRange &ancilla) {
    if (oracle.width() != ancilla.size) {
        throw Error(ErrorCode::WidthMismatch, "oracle register width differs from ancilla range");
    }
    std::vector<std::uint64_t> table(dim_of(data.size));
    for (std::uint64_t x = 0; x < table.size(); ++x) {
        table[x] = oracle.encode(static_cast<std::int64_t>(x));
    }
    return table;
}

double ramp_phase(const AncillaPhaseRamp &g, std::uint64_t word) {
    const std::uint64_t sign = std::uint64_t{1} << (g.ancilla.size - 1);
    const double value = (word & sign) ? static_cast<double>(word) - std::ldexp(1.0, g.ancilla.size)
                                       : static_cast<double>(word);
    return -g.t * g.value_scale * value;
}

void normalize_sparse(std::vector<SparseState::Entry> &entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<SparseState::Entry> merged;
    merged.reserve(entries.size());
    for (const auto &e : entries) {
        if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const auto &e) { return std::norm(e.second) < kSparsePruneNorm2; });
    entries = std::move(merged);
}

} // namespace

StateVector::StateVector(int n_qubits, CVector amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ < 0 || n_qubits_ > kMaxDenseQubits) {
        throw Error(ErrorCode::WidthExceeded, "dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    if (static_cast<std::uint64_t>(amplitudes_.size()) != dim_of(n_qubits_)) {
        throw Error(ErrorCode::WidthMismatch, "amplitude count is not 2^n_qubits");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << "state norm " << amplitudes_.norm() << " differs from 1";
        throw Error(ErrorCode::InvalidInput, msg.str());
    }
}

SparseState::SparseState(int n_qubits, std::vector<Entry> entries) : n_qubits_(n_qubits), entries_(std::move(entries)) {
    if (n_qubits_ < 0 || n_qubits_ > kMaxSparseQubits) {
        throw Error(ErrorCode::WidthExceeded, "sparse state limited to " + std::to_string(kMaxSparseQubits) + " qubits");
    }
    for (const auto &e : entries_) {
        if (e.first >= dim_of(n_qubits_)) {
            throw Error(ErrorCode::IndexOutOfRange, "sparse entry index outside register");
        }
    }
    normalize_sparse(entries_);
}

SparseState SparseState::from_dense(const StateVector &state, int extra_qubits) {
    std::vector<Entry> entries;
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        if (state[i] != Complex{0.0, 0.0}) {
            entries.emplace_back(static_cast<std::uint64_t>(i) << extra_qubits, state[i]);
        }
    }
    return SparseState(state.n_qubits() + extra_qubits, std::move(entries));
}

Complex SparseState::amplitude(std::uint64_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry &e, std::uint64_t i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : Complex{0.0, 0.0};
}

double SparseState::norm() const {
    double sum = 0.0;
    for (const auto &e : entries_) {
        sum += std::norm(e.second);
    }
    return std::sqrt(sum);
}

StateVector SparseState::to_dense() const {
    if (n_qubits_ > kMaxDenseQubits) {
        throw Error(ErrorCode::WidthExceeded, "sparse state too wide for dense conversion");
    }
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim_of(n_qubits_)));
    for (const auto &e : entries_) {
        amps[static_cast<Eigen::Index>(e.first)] = e.second;
    }
    return StateVector(n_qubits_, std::move(amps));
}

Distribution make_distribution(RVector probabilities) {
    for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] < 0.0) {
            if (probabilities[i] < -kNegativeProbabilityTol) {
                throw Error(ErrorCode::InvalidInput, "probability " + std::to_string(probabilities[i]) + " is negative");
            }
            probabilities[i] = 0.0;
        }
    }
    if (std::abs(probabilities.sum() - 1.0) > kNormTol) {
        throw Error(ErrorCode::InvalidInput, "probabilities sum to " + std::to_string(probabilities.sum()));
    }
    return Distribution{std::move(probabilities)};
}

StateVector basis_state(std::uint64_t x, int width) {
    if (width < 0 || width > kMaxDenseQubits) {
        throw Error(ErrorCode::WidthExceeded, "dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    if (x >= dim_of(width)) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "basis index " + std::to_string(x) + " outside " + std::to_string(width) + " qubits");
    }
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim_of(width)));
    amps[static_cast<Eigen::Index>(x)] = 1.0;
    return StateVector(width, std::move(amps));
}

StateVector state_from_amplitudes(const CVector &amplitudes, bool renormalize_any) {
    const auto n = static_cast<std::uint64_t>(amplitudes.size());
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::NotPowerOfTwo, "amplitude count " + std::to_string(n) + " is not a power of two");
    }
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw Error(ErrorCode::ZeroVector, "amplitudes are all zero");
    }
    if (!std::isfinite(norm)) {
        throw Error(ErrorCode::NonFinite, "amplitudes are not finite");
    }
    if (!renormalize_any && std::abs(norm - 1.0) > 1e-6) {
        throw Error(ErrorCode::InvalidInput, "state norm differs from 1 by more than 1e-6");
    }
    return StateVector(log2_exact(n), amplitudes / norm);
}

void apply_gate_inplace(CVector &v, int n, const Gate &gate, const std::vector<FixedPointOracle> &oracles) {
    check_gate(gate, n);
    const std::uint64_t dim = dim_of(n);
    if (static_cast<std::uint64_t>(v.size()) != dim) {
        throw Error(ErrorCode::WidthMismatch, "amplitude count is not 2^width");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // XOR is an involution, so compute and uncompute share one permutation.
    auto oracle_xor = [&](const QubitRange &data, const QubitRange &ancilla, int id) {
        const auto table = oracle_table(lookup(oracles, id), data, ancilla);
        CVector out(v.size());
        for (std::uint64_t i = 0; i < dim; ++i) {
            const std::uint64_t word = table[register_value(i, n, data)];
            out[i ^ register_shift(word, n, ancilla)] = v[i];
        }
        v = std::move(out);
    };
    std::visit(overloaded{
                   [&](const Hadamard &g) {
                       const std::uint64_t m = qubit_mask(n, g.target);
                       for (std::uint64_t i = 0; i < dim; ++i) {
                           if (i & m) {
                               continue;
                           }
                           const Complex a0 = v[i];
                           const Complex a1 = v[i | m];
                           v[i] = (a0 + a1) * inv_sqrt2;
                           v[i | m] = (a0 - a1) * inv_sqrt2;
                       }
                   },
                   [&](const PauliX &g) {
                       const std::uint64_t m = qubit_mask(n, g.target);
                       for (std::uint64_t i = 0; i < dim; ++i) {
                           if (!(i & m)) {
                               std::swap(v[i], v[i | m]);
                           }
                       }
                   },
                   [&](const Phase &g) {
                       const std::uint64_t m = qubit_mask(n, g.target);
                       const Complex f = std::polar(1.0, g.theta);
                       for (std::uint64_t i = 0; i < dim; ++i) {
                           if (i & m) {
                               v[i] *= f;
                           }
                       }
                   },
                   [&](const MultiControlledPhase &g) {
                       const ControlPattern p = pattern_of(g, n);
                       const Complex f = std::polar(1.0, g.theta);
                       for (std::uint64_t i = 0; i < dim; ++i) {
                           if ((i & p.mask) == p.value) {
                               v[i] *= f;
                           }
                       }
                   },
                   [&](const Swap &g) {
                       if (g.a == g.b) {
                           return;
                       }
                       const std::uint64_t ma = qubit_mask(n, g.a);
                       const std::uint64_t mb = qubit_mask(n, g.b);
                       for (std::uint64_t i = 0; i < dim; ++i) {
                           if ((i & ma) && !(i & mb)) {
                               std::swap(v[i], v[i ^ ma ^ mb]);
                           }
                       }
                   },
                   [&](const OracleCompute &g) { oracle_xor(g.data, g.ancilla, g.oracle_id); },
                   [&](const OracleUncompute &g) { oracle_xor(g.data, g.ancilla, g.oracle_id); },
                   [&](const AncillaPhaseRamp &g) {
                       for (std::uint64_t i = 0; i < dim; ++i) {
                           const double phase = ramp_phase(g, register_value(i, n, g.ancilla));
                           if (phase != 0.0) {
                               v[i] *= std::polar(1.0, phase);
                           }
                       }
                   },
               },
               gate);
}

void apply_gate_inplace(SparseState &state, const Gate &gate, const std::vector<FixedPointOracle> &oracles) {
    const int n = state.n_qubits();
    check_gate(gate, n);
    auto &entries = state.mutable_entries();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    auto oracle_xor = [&](const QubitRange &data, const QubitRange &ancilla, int id) {
        const FixedPointOracle &oracle = lookup(oracles, id);
        if (oracle.width() != ancilla.size) {
            throw Error(ErrorCode::WidthMismatch, "oracle register width differs from ancilla range");
        }
        for (auto &e : entries) {
            const auto x = static_cast<std::int64_t>(register_value(e.first, n, data));
            e.first ^= register_shift(oracle.encode(x), n, ancilla);
        }
        normalize_sparse(entries);
    };
    std::visit(overloaded{
                   [&](const Hadamard &g) {
                       const std::uint64_t m = qubit_mask(n, g.target);
                       std::vector<SparseState::Entry> next;
                       next.reserve(2 * entries.size());
                       for (const auto &[i, a] : entries) {
                           const Complex h = a * inv_sqrt2;
                           next.emplace_back(i & ~m, h);
                           next.emplace_back(i | m, (i & m) ? -h : h);
                       }
                       entries = std::move(next);
                       normalize_sparse(entries);
                   },
                   [&](const PauliX &g) {
                       const std::uint64_t m = qubit_mask(n, g.target);
                       for (auto &e : entries) {
                           e.first ^= m;
                       }
                       normalize_sparse(entries);
                   },
                   [&](const Phase &g) {
                       const std::uint64_t m = qubit_mask(n, g.target);
                       const Complex f = std::polar(1.0, g.theta);
                       for (auto &e : entries) {
                           if (e.first & m) {
                               e.second *= f;
                           }
                       }
                   },
                   [&](const MultiControlledPhase &g) {
                       const ControlPattern p = pattern_of(g, n);
                       const Complex f = std::polar(1.0, g.theta);
                       for (auto &e : entries) {
                           if ((e.first & p.mask) == p.value) {
                               e.second *= f;
                           }
                       }
                   },
                   [&](const Swap &g) {
                       const std::uint64_t ma = qubit_mask(n, g.a);
                       const std::uint64_t mb = qubit_mask(n, g.b);
                       for (auto &e : entries) {
                           if (static_cast<bool>(e.first & ma) != static_cast<bool>(e.first & mb)) {
                               e.first ^= ma ^ mb;
                           }
                       }
                       normalize_sparse(entries);
                   },
                   [&](const OracleCompute &g) { oracle_xor(g.data, g.ancilla, g.oracle_id); },
                   [&](const OracleUncompute &g) { oracle_xor(g.data, g.ancilla, g.oracle_id); },
                   [&](const AncillaPhaseRamp &g) {
                       for (auto &e : entries) {
                           e.second *= std::polar(1.0, ramp_phase(g, register_value(e.first, n, g.ancilla)));
                       }
                   },
               },
               gate);
}

StateVector apply_gate(const StateVector &state, const Gate &gate, const std::vector<FixedPointOracle> &oracles) {
    CVector amps = state.amplitudes();
    apply_gate_inplace(amps, state.n_qubits(), gate, oracles);
    return StateVector(state.n_qubits(), std::move(amps));
}

namespace {

CVector widen_input(const Circuit &circuit, const CVector &amps, int input_qubits) {
    if (input_qubits == circuit.width()) {
        return amps;
    }
    if (input_qubits != circuit.n_data) {
        throw Error(ErrorCode::WidthMismatch, "input has " + std::to_string(input_qubits) +
                                                  " qubits; circuit expects " + std::to_string(circuit.n_data) +
                                                  " or " + std::to_string(circuit.width()));
    }
    CVector out = CVector::Zero(static_cast<Eigen::Index>(dim_of(circuit.width())));
    for (Eigen::Index x = 0; x < amps.size(); ++x) {
        out[static_cast<Eigen::Index>(static_cast<std::uint64_t>(x) << circuit.n_ancilla)] = amps[x];
    }
    return out;
}

} // namespace

CVector run_raw(const Circuit &circuit, const CVector &amplitudes) {
    if (circuit.width() > kMaxDenseQubits) {
        throw Error(ErrorCode::WidthExceeded, "circuit width " + std::to_string(circuit.width()) +
                                                  " exceeds dense limit " + std::to_string(kMaxDenseQubits));
    }
    const auto n = static_cast<std::uint64_t>(amplitudes.size());
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::WidthMismatch, "amplitude count is not a power of two");
    }
    validate(circuit);
    CVector v = widen_input(circuit, amplitudes, log2_exact(n));
    for (const Gate &g : circuit.gates) {
        apply_gate_inplace(v, circuit.width(), g, circuit.oracles);
    }
    return v;
}

StateVector run(const Circuit &circuit, const StateVector &input) {
    if (input.n_qubits() != circuit.n_data && input.n_qubits() != circuit.width()) {
        throw Error(ErrorCode::WidthMismatch, "input width " + std::to_string(input.n_qubits()) +
                                                  " does not match circuit width " + std::to_string(circuit.width()));
    }
    CVector out = run_raw(circuit, input.amplitudes());
    return StateVector(circuit.width(), std::move(out));
}

SparseState run(const Circuit &circuit, const SparseState &input) {
    validate(circuit);
    SparseState state = input;
    if (input.n_qubits() == circuit.n_data && circuit.n_ancilla > 0) {
        std::vector<SparseState::Entry> entries = input.entries();
        for (auto &e : entries) {
            e.first <<= circuit.n_ancilla;
        }
        state = SparseState(circuit.width(), std::move(entries));
    } else if (input.n_qubits() != circuit.width()) {
        throw Error(ErrorCode::WidthMismatch, "input width " + std::to_string(input.n_qubits()) +
                                                  " does not match circuit width " + std::to_string(circuit.width()));
    }
    for (const Gate &g : circuit.gates) {
        apply_gate_inplace(state, g, circuit.oracles);
    }
    return state;
}

Distribution run_distribution(const Circuit &circuit, const StateVector &data_input) {
    if (circuit.has_oracle_gates() || circuit.width() > kMaxDenseQubits) {
        return probabilities(run(circuit, SparseState::from_dense(data_input)), circuit.n_data);
    }
    return probabilities(run(circuit, data_input), circuit.n_data);
}

Distribution probabilities(const StateVector &state, int n_data) {
    if (n_data < 0 || n_data > state.n_qubits()) {
        throw Error(ErrorCode::WidthMismatch, "n_data exceeds state width");
    }
    const int traced = state.n_qubits() - n_data;
    RVector p = RVector::Zero(static_cast<Eigen::Index>(dim_of(n_data)));
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        p[i >> traced] += std::norm(state[i]);
    }
    return make_distribution(std::move(p));
}

Distribution probabilities(const SparseState &state, int n_data) {
    if (n_data < 0 || n_data > state.n_qubits() || n_data > kMaxDenseQubits) {
        throw Error(ErrorCode::WidthMismatch, "n_data exceeds state width or dense limit");
    }
    const int traced = state.n_qubits() - n_data;
    RVector p = RVector::Zero(static_cast<Eigen::Index>(dim_of(n_data)));
    for (const auto &[i, a] : state.entries()) {
        p[static_cast<Eigen::Index>(i >> traced)] += std::norm(a);
    }
    return make_distribution(std::move(p));
}

double ancilla_zero_probability(const StateVector &state, int n_data) {
    const int traced = state.n_qubits() - n_data;
    const std::uint64_t mask = dim_of(traced) - 1;
    double p = 0.0;
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        if ((static_cast<std::uint64_t>(i) & mask) == 0) {
            p += std::norm(state[i]);
        }
    }
    return p;
}

double ancilla_zero_probability(const SparseState &state, int n_data) {
    const int traced = state.n_qubits() - n_data;
    const std::uint64_t mask = dim_of(traced) - 1;
    double p = 0.0;
    for (const auto &[i, a] : state.entries()) {
        if ((i & mask) == 0) {
            p += std::norm(a);
        }
    }
    return p;
}

ShotCounts sample(const Distribution &dist, std::uint64_t shots, std::uint64_t seed) {
    ShotCounts out;
    out.shots = shots;
    out.seed = seed;
    if (shots == 0) {
        return out;
    }
    const Eigen::Index n = dist.n_outcomes();
    if (n == 0) {
        throw Error(ErrorCode::InvalidInput, "cannot sample an empty distribution");
    }
    std::vector<double> cdf(static_cast<std::size_t>(n));
    double acc = 0.0;
    std::ptrdiff_t last_positive = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (dist[i] > 0.0) {
            acc += dist[i];
            last_positive = i;
        }
        cdf[static_cast<std::size_t>(i)] = acc;
    }
    if (acc <= 0.0) {
        throw Error(ErrorCode::InvalidInput, "distribution has no mass");
    }
    SplitMix64Stream stream(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = stream.uniform() * acc;
        // First outcome whose cumulative mass exceeds u; never a zero-mass one.
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::uint64_t>(it == cdf.end() ? last_positive : it - cdf.begin());
        ++out.counts[idx];
    }
    return out;
}

CMatrix circuit_unitary(const Circuit &circuit) {
    if (circuit.width() > kMaxUnitaryQubits) {
        throw Error(ErrorCode::WidthExceeded, "unitary extraction limited to " + std::to_string(kMaxUnitaryQubits) +
                                                  " qubits, circuit has " + std::to_string(circuit.width()));
    }
    const auto dim = static_cast<Eigen::Index>(dim_of(circuit.width()));
    CMatrix u(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        CVector col = CVector::Zero(dim);
        col[j] = 1.0;
        u.col(j) = run_raw(circuit, col);
    }
    return u;
}

} // namespace qwalk
