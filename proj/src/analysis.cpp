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

#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

void require_same_length(Eigen::Index a, Eigen::Index b, ErrorCode code, const char *what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": lengths " << a << " and " << b << " differ";
        throw Error(code, msg.str());
    }
}

StateVector as_state(const CVector &amps, int n_qubits) {
    // Evolution is unitary; renormalize away the last ulp of drift.
    return StateVector(n_qubits, amps / amps.norm());
}

} // namespace

CMatrix dense_propagator(const CirculantGraph &graph, double t) {
    if (graph.n_vertices() > kMaxDenseEvolutionVertices) {
        throw Error(ErrorCode::TooLarge, "dense evolution limited to N <= " + std::to_string(kMaxDenseEvolutionVertices));
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(hamiltonian(graph));
    const CMatrix v = solver.eigenvectors().cast<Complex>();
    const CVector phases = (-Complex(0.0, t) * solver.eigenvalues().cast<Complex>()).array().exp();
    return v * phases.asDiagonal() * v.adjoint();
}

CVector dense_evolution(const CirculantGraph &graph, double t, const CVector &input) {
    require_same_length(input.size(), graph.n_vertices(), ErrorCode::WidthMismatch, "dense_evolution");
    if (graph.n_vertices() > kMaxDenseEvolutionVertices) {
        throw Error(ErrorCode::TooLarge, "dense evolution limited to N <= " + std::to_string(kMaxDenseEvolutionVertices));
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(hamiltonian(graph));
    const CMatrix v = solver.eigenvectors().cast<Complex>();
    const CVector phases = (-Complex(0.0, t) * solver.eigenvalues().cast<Complex>()).array().exp();
    return v * (phases.asDiagonal() * (v.adjoint() * input));
}

StateVector dense_evolution(const CirculantGraph &graph, double t, const StateVector &input) {
    return as_state(dense_evolution(graph, t, input.amplitudes()), input.n_qubits());
}

CVector fft_evolution(const CirculantGraph &graph, double t, const CVector &input) {
    require_same_length(input.size(), graph.n_vertices(), ErrorCode::WidthMismatch, "fft_evolution");
    const RVector lambda = circulant_eigenvalues(graph);
    if (input.size() == 1) {
        return std::polar(1.0, -t * lambda[0]) * input;
    }
    Eigen::FFT<double> fft;
    // Q psi = sqrt(N) * inv(psi) and Q^dagger phi = fwd(phi) / sqrt(N); the
    // scale factors cancel.
    CVector rotated(input.size());
    fft.inv(rotated, input);
    for (Eigen::Index m = 0; m < rotated.size(); ++m) {
        rotated[m] *= std::polar(1.0, -t * lambda[m]);
    }
    CVector out(input.size());
    fft.fwd(out, rotated);
    return out;
}

StateVector fft_evolution(const CirculantGraph &graph, double t, const StateVector &input) {
    return as_state(fft_evolution(graph, t, input.amplitudes()), input.n_qubits());
}

double p_d(const RVector &phases) {
    const auto n = static_cast<std::uint64_t>(phases.size());
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::NotPowerOfTwo, "phase count " + std::to_string(n) + " is not a power of two");
    }
    Complex sum{0.0, 0.0};
    for (Eigen::Index x = 0; x < phases.size(); ++x) {
        sum += std::polar(1.0, phases[x]);
    }
    return std::norm(sum / static_cast<double>(n));
}

double p_d(const RVector &phases, int n) {
    if (n < 0 || n > 62 || static_cast<std::uint64_t>(phases.size()) != (std::uint64_t{1} << n)) {
        throw Error(ErrorCode::NotPowerOfTwo, "phase count does not equal 2^" + std::to_string(n));
    }
    return p_d(phases);
}

MultiplicativeErrorReport multiplicative_error(double p_approx, double p_exact) {
    if (p_exact < 0.0 || p_approx < 0.0) {
        throw Error(ErrorCode::InvalidInput, "probabilities must be nonnegative");
    }
    if (p_exact == 0.0) {
        if (p_approx != 0.0) {
            throw Error(ErrorCode::ZeroExact, "exact probability is 0 but the approximation is not");
        }
        return {0.0, true};
    }
    const double eps = std::abs(p_approx - p_exact) / p_exact;
    return {eps, eps < 0.5};
}

SwapTestResult swap_test_exact(const CVector &psi, const CVector &phi) {
    require_same_length(psi.size(), phi.size(), ErrorCode::WidthMismatch, "swap_test");
    const double overlap = std::clamp(std::norm(phi.dot(psi)), 0.0, 1.0);
    return {overlap, 0.5 * (1.0 - overlap), 0};
}

SwapTestResult swap_test_exact(const StateVector &psi, const StateVector &phi) {
    return swap_test_exact(psi.amplitudes(), phi.amplitudes());
}

SwapTestResult swap_test_sampled(const CVector &psi, const CVector &phi, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorCode::InvalidInput, "swap test needs at least one shot");
    }
    const SwapTestResult exact = swap_test_exact(psi, phi);
    SplitMix64Stream stream(seed);
    std::uint64_t ones = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (stream.uniform() < exact.p_one) {
            ++ones;
        }
    }
    const double p_one = static_cast<double>(ones) / static_cast<double>(shots);
    const double overlap = std::clamp(1.0 - 2.0 * p_one, 0.0, 1.0);
    return {overlap, 0.5 * (1.0 - overlap), shots};
}

SwapTestResult swap_test_sampled(const StateVector &psi, const StateVector &phi, std::uint64_t shots,
                                 std::uint64_t seed) {
    return swap_test_sampled(psi.amplitudes(), phi.amplitudes(), shots, seed);
}

double classical_swap_exact(const RVector &phases, const RVector &phases_tilde) {
    require_same_length(phases.size(), phases_tilde.size(), ErrorCode::LengthMismatch, "classical_swap");
    if (phases.size() == 0) {
        throw Error(ErrorCode::InvalidInput, "empty phase list");
    }
    Complex sum{0.0, 0.0};
    for (Eigen::Index x = 0; x < phases.size(); ++x) {
        sum += std::polar(1.0, phases[x] + phases_tilde[x]);
    }
    return std::norm(sum / static_cast<double>(phases.size()));
}

double classical_swap_estimate(const RVector &phases, const RVector &phases_tilde, std::uint64_t samples,
                               std::uint64_t seed) {
    require_same_length(phases.size(), phases_tilde.size(), ErrorCode::LengthMismatch, "classical_swap");
    if (phases.size() == 0 || samples == 0) {
        throw Error(ErrorCode::InvalidInput, "classical swap estimate needs phases and at least one sample");
    }
    SplitMix64Stream stream(seed);
    const auto n = static_cast<std::uint64_t>(phases.size());
    Complex sum{0.0, 0.0};
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto x = static_cast<Eigen::Index>(stream.below(n));
        sum += std::polar(1.0, phases[x] + phases_tilde[x]);
    }
    return std::norm(sum / static_cast<double>(samples));
}

double bhattacharyya(const RVector &p, const RVector &q) {
    require_same_length(p.size(), q.size(), ErrorCode::ShapeMismatch, "bhattacharyya");
    if ((p.array() < 0.0).any() || (q.array() < 0.0).any()) {
        throw Error(ErrorCode::InvalidInput, "distributions must be nonnegative");
    }
    return (p.array() * q.array()).sqrt().sum();
}

double average_distribution_fidelity(std::span<const DistributionPair> pairs) {
    if (pairs.empty()) {
        throw Error(ErrorCode::InvalidInput, "no distribution pairs");
    }
    double sum = 0.0;
    for (const DistributionPair &pair : pairs) {
        sum += bhattacharyya(pair.ideal.probabilities, pair.observed.probabilities);
    }
    return sum / static_cast<double>(pairs.size());
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw Error(ErrorCode::ShapeMismatch, "density matrix must be square and nonempty");
    }
    const DensityCheck c = check();
    if (!valid()) {
        std::ostringstream msg;
        msg << "density matrix invalid: hermiticity defect " << c.hermiticity_defect << ", trace " << c.trace
            << ", min eigenvalue " << c.min_eigenvalue;
        throw Error(ErrorCode::InvalidInput, msg.str());
    }
}

DensityMatrix DensityMatrix::unchecked(CMatrix entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw Error(ErrorCode::ShapeMismatch, "density matrix must be square and nonempty");
    }
    return DensityMatrix(std::move(entries), NoCheck{});
}

DensityCheck DensityMatrix::check() const {
    DensityCheck c;
    c.hermiticity_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    c.trace = entries_.trace().real();
    const CMatrix hermitian_part = 0.5 * (entries_ + entries_.adjoint());
    c.min_eigenvalue = Eigen::SelfAdjointEigenSolver<CMatrix>(hermitian_part, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    return c;
}

bool DensityMatrix::valid() const {
    const DensityCheck c = check();
    return c.hermiticity_defect <= kHermiticityTol && std::abs(c.trace - 1.0) <= kTraceTol &&
           c.min_eigenvalue >= kMinEigenvalue;
}

DensityFidelity density_fidelity(const DensityMatrix &rho, const CVector &phi) {
    require_same_length(rho.dim(), phi.size(), ErrorCode::ShapeMismatch, "density_fidelity");
    const double linear = phi.dot(rho.entries() * phi).real();
    return {linear, std::sqrt(std::max(0.0, linear))};
}

} // namespace qwalk
