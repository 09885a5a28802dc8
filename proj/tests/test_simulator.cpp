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


#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qwalk/compiler.hpp"
#include "qwalk/simulator.hpp"

using namespace qwalk;

namespace {

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidInput;
}

CVector vec(std::initializer_list<Complex> xs) {
    CVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (Complex x : xs) {
        v[i++] = x;
    }
    return v;
}

const Complex I{0.0, 1.0};

std::vector<CVector> k4_initial_states() {
    const double s = 1.0 / std::sqrt(2.0);
    return {vec({1, 0, 0, 0}),         vec({s, s, 0, 0}),         vec({s, -s, 0, 0}),
            vec({s, -I * s, 0, 0}),    vec({0.5, 0.5 * I, 0.5, 0.5 * I}), vec({0.5, 0.5 * I, 0.5 * I, -0.5})};
}

Circuit random_circuit(int n, int gates, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    Circuit c;
    c.n_data = n;
    for (int i = 0; i < gates; ++i) {
        const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int r = static_cast<int>((q + 1 + rng() % static_cast<std::uint64_t>(std::max(1, n - 1))) % n);
        switch (rng() % 5) {
        case 0: c.gates.push_back(Hadamard{q}); break;
        case 1: c.gates.push_back(PauliX{q}); break;
        case 2: c.gates.push_back(Phase{q, angle(rng)}); break;
        case 3:
            if (n > 1) c.gates.push_back(Swap{q, r});
            break;
        default:
            if (n > 1) {
                c.gates.push_back(MultiControlledPhase{{{r, rng() % 2 ? Polarity::IfOne : Polarity::IfZero}}, q, angle(rng)});
            }
        }
    }
    return c;
}

} // namespace

TEST_CASE("basis_state") {
    CHECK(basis_state(0, 2).amplitudes() == vec({1, 0, 0, 0}));
    CHECK(basis_state(3, 2).amplitudes() == vec({0, 0, 0, 1}));
    for (std::uint64_t x = 0; x < 8; ++x) {
        CHECK(basis_state(x, 3).norm() == 1.0);
    }
    CHECK(code_of([] { basis_state(4, 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("state_from_amplitudes") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(state_from_amplitudes(vec({s, s, 0, 0})).n_qubits() == 2);
    const StateVector five = state_from_amplitudes(vec({0.5, 0.5 * I, 0.5, 0.5 * I}));
    CHECK(std::abs(five.norm() - 1.0) < 1e-15);
    CHECK(state_from_amplitudes(vec({2, 0})).amplitudes() == vec({1, 0}));
    CHECK(code_of([] { state_from_amplitudes(vec({2, 0}), false); }) == ErrorCode::InvalidInput);
    CHECK_NOTHROW(state_from_amplitudes(vec({1.0 + 1e-7, 0}), false));
    CHECK(code_of([] { state_from_amplitudes(vec({1, 0, 0})); }) == ErrorCode::NotPowerOfTwo);
    CHECK(code_of([] { state_from_amplitudes(vec({0, 0})); }) == ErrorCode::ZeroVector);
    CHECK(code_of([] { StateVector(1, vec({1, 1})); }) == ErrorCode::InvalidInput);
}

TEST_CASE("apply_gate examples") {
    const StateVector plus = apply_gate(basis_state(0, 1), Hadamard{0});
    CHECK(std::abs(plus[0] - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(plus[1] - 1 / std::sqrt(2.0)) < 1e-15);

    const double t = 0.3;
    const StateVector r = apply_gate(basis_state(1, 1), Phase{0, -4 * t});
    CHECK(std::abs(r[1] - std::polar(1.0, -4 * t)) < 1e-15);

    const StateVector uniform = state_from_amplitudes(vec({0.5, 0.5, 0.5, 0.5}));
    const StateVector flipped =
        apply_gate(uniform, MultiControlledPhase{{{0, Polarity::IfZero}, {1, Polarity::IfZero}}, std::nullopt, kPi});
    CHECK(std::abs(flipped[0] + 0.5) < 1e-15);
    for (int i = 1; i < 4; ++i) {
        CHECK(std::abs(flipped[i] - 0.5) < 1e-15);
    }

    // Big-endian: qubit 0 is the most significant bit.
    CHECK(apply_gate(basis_state(0, 2), PauliX{0}).amplitudes() == basis_state(2, 2).amplitudes());
    CHECK(apply_gate(basis_state(1, 2), Swap{0, 1}).amplitudes() == basis_state(2, 2).amplitudes());
    CHECK(code_of([] { apply_gate(basis_state(0, 2), Hadamard{2}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("run examples") {
    const auto k4 = standard_graph(GraphKind::Complete, 4);
    const Distribution d = probabilities(run(compile_ctqw(k4, kPi / 8), basis_state(0, 2)), 2);
    CHECK(d[0] == doctest::Approx(0.625).epsilon(1e-12));
    for (int x = 1; x < 4; ++x) {
        CHECK(d[x] == doctest::Approx(0.125).epsilon(1e-12));
    }

    Circuit empty;
    empty.n_data = 2;
    const StateVector psi = state_from_amplitudes(vec({0.5, 0.5 * I, 0.5, 0.5 * I}));
    CHECK(run(empty, psi).amplitudes() == psi.amplitudes());

    const double s = 1.0 / std::sqrt(2.0);
    const CVector out = run(compile_ctqw(k4, 7 * kPi / 8), state_from_amplitudes(vec({s, s, 0, 0}))).amplitudes();
    const Complex a = s * (1.0 + I) / 2.0;
    CHECK(max_diff_up_to_phase(out, vec({a, a, I * a, I * a})) < 1e-12);

    CHECK(code_of([&] { run(compile_ctqw(k4, 1.0), basis_state(0, 3)); }) == ErrorCode::WidthMismatch);
}

TEST_CASE("ancilla register is appended and restored") {
    CompilerOptions opts;
    opts.strategy = Strategy::Oracle;
    opts.k_frac = 2;
    const Circuit c = compile_ctqw(standard_graph(GraphKind::Complete, 4), kPi / 8, opts);
    REQUIRE(c.n_ancilla > 0);
    const StateVector out = run(c, basis_state(0, 2));
    CHECK(out.n_qubits() == c.width());
    CHECK(ancilla_zero_probability(out, c.n_data) >= 1.0 - 1e-12);
    const Distribution d = probabilities(out, c.n_data);
    CHECK(d[0] == doctest::Approx(0.625).epsilon(1e-12));

    // Every basis input, k_frac = 24, sparse path.
    opts.k_frac = 24;
    for (int n : {4, 8, 16, 32, 64}) {
        const Circuit wide = compile_ctqw(standard_graph(GraphKind::Cycle, n), 1.7, opts);
        for (int x = 0; x < n; ++x) {
            const SparseState st =
                run(wide, SparseState::from_dense(basis_state(static_cast<std::uint64_t>(x), wide.n_data)));
            CHECK(ancilla_zero_probability(st, wide.n_data) >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("dense and sparse kernels agree") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 6;
        Circuit c = random_circuit(n, 30, rng);
        const StateVector psi = state_from_amplitudes(oracle::random_state(1 << n, rng));
        const StateVector dense = run(c, psi);
        const StateVector sparse = run(c, SparseState::from_dense(psi)).to_dense();
        CHECK((dense.amplitudes() - sparse.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
    }
    CompilerOptions opts;
    opts.strategy = Strategy::Oracle;
    opts.k_frac = 4;
    const Circuit oc = compile_ctqw(standard_graph(GraphKind::Cycle, 8), 0.4, opts);
    const StateVector psi = state_from_amplitudes(oracle::random_state(8, rng));
    const StateVector dense = run(oc, psi);
    const StateVector sparse = run(oc, SparseState::from_dense(psi)).to_dense();
    CHECK((dense.amplitudes() - sparse.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("probabilities") {
    const CVector a = vec({0.6, 0.8 * I});
    const Distribution d = probabilities(state_from_amplitudes(a), 1);
    CHECK(d[0] == doctest::Approx(0.36));
    CHECK(d[1] == doctest::Approx(0.64));

    const Distribution u = probabilities(state_from_amplitudes(vec({0.5, 0.5, 0.5, 0.5})), 2);
    for (int x = 0; x < 4; ++x) {
        CHECK(u[x] == 0.25);
    }

    const auto k4 = standard_graph(GraphKind::Complete, 4);
    CompilerOptions few;
    few.strategy = Strategy::FewEigenvalues;
    CompilerOptions orc;
    orc.strategy = Strategy::Oracle;
    for (const CVector &init : k4_initial_states()) {
        const StateVector psi = state_from_amplitudes(init);
        const Distribution a1 = run_distribution(compile_ctqw(k4, 0.77, few), psi);
        const Distribution a2 = run_distribution(compile_ctqw(k4, 0.77, orc), psi);
        CHECK((a1.probabilities - a2.probabilities).cwiseAbs().maxCoeff() < 1e-8);
    }

    // Marginal over a data prefix.
    const StateVector two = state_from_amplitudes(vec({0.5, 0.5, 0.5 * I, -0.5}));
    const Distribution marginal = probabilities(two, 1);
    CHECK(marginal[0] == doctest::Approx(0.5));
    CHECK(marginal[1] == doctest::Approx(0.5));
    CHECK(code_of([&] { probabilities(two, 3); }) == ErrorCode::WidthMismatch);
}

TEST_CASE("make_distribution") {
    RVector p(3);
    p << 0.5, 0.5, -1e-13;
    CHECK(make_distribution(p)[2] == 0.0);
    p << 0.5, 0.5 + 1e-6, -1e-6;
    CHECK(code_of([&] { make_distribution(p); }) == ErrorCode::InvalidInput);
    p << 0.5, 0.4, 0.0;
    CHECK(code_of([&] { make_distribution(p); }) == ErrorCode::InvalidInput);
}

TEST_CASE("sample") {
    RVector p(4);
    p << 0.625, 0.125, 0.125, 0.125;
    const Distribution d = make_distribution(p);
    CHECK(sample(d, 0, 1).counts.empty());
    CHECK(sample(d, 0, 1).shots == 0);

    RVector point = RVector::Zero(8);
    point[5] = 1.0;
    const ShotCounts pc = sample(make_distribution(point), 1000, 3);
    CHECK(pc.count(5) == 1000);
    CHECK(pc.counts.size() == 1);

    const std::uint64_t m = 1000000;
    const ShotCounts sc = sample(d, m, 20240601);
    std::uint64_t total = 0;
    for (const auto &[k, v] : sc.counts) {
        total += v;
    }
    CHECK(total == m);
    CHECK(sc.seed == 20240601);
    for (int x = 0; x < 4; ++x) {
        const double f = static_cast<double>(sc.count(static_cast<std::uint64_t>(x))) / static_cast<double>(m);
        CHECK(std::abs(f - p[x]) <= 4 * std::sqrt(p[x] * (1 - p[x]) / static_cast<double>(m)));
    }

    const ShotCounts again = sample(d, m, 20240601);
    CHECK(again.counts == sc.counts);
    CHECK(sample(d, 1000, 1).counts != sample(d, 1000, 2).counts);
}

TEST_CASE("circuit_unitary") {
    Circuit empty;
    empty.n_data = 3;
    CHECK(circuit_unitary(empty) == CMatrix::Identity(8, 8));

    CHECK((circuit_unitary(qft_circuit(2)) - oracle::dft_matrix(4)).cwiseAbs().maxCoeff() < 1e-12);

    for (double t : {0.0, 0.3, kPi / 8, 2.0}) {
        const CMatrix ref = oracle::propagator({1, 1, 1, 1}, 1.0, t);
        CompilerOptions few;
        few.strategy = Strategy::FewEigenvalues;
        CHECK((circuit_unitary(compile_ctqw(standard_graph(GraphKind::Complete, 4), t, few)) - ref)
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
        CHECK((circuit_unitary(compile_ctqw(standard_graph(GraphKind::Complete, 4), t)) - ref).cwiseAbs().maxCoeff() <
              1e-10);
    }

    Circuit wide;
    wide.n_data = kMaxUnitaryQubits + 1;
    CHECK(code_of([&] { circuit_unitary(wide); }) == ErrorCode::WidthExceeded);
}

TEST_CASE("norm preservation and linearity") {
    std::mt19937_64 rng(43);
    for (int n : {2, 4, 8, 16, 32}) {
        const auto g = circulant_from_row(oracle::random_symmetric_row(n, rng), 1.0);
        for (Strategy s : {Strategy::FewEigenvalues, Strategy::Oracle}) {
            CompilerOptions opts;
            opts.strategy = s;
            opts.k_frac = 8;
            const Circuit c = compile_ctqw(g, 1.3, opts);
            const CVector psi = oracle::random_state(n, rng);
            const CVector phi = oracle::random_state(n, rng);
            if (c.width() <= kMaxDenseQubits) {
                CHECK(std::abs(run(c, state_from_amplitudes(psi)).norm() - 1.0) <= 1e-10);
                const Complex alpha{0.3, -1.2};
                const Complex beta{2.0, 0.5};
                const CVector lhs = run_raw(c, alpha * psi + beta * phi);
                const CVector rhs = alpha * run_raw(c, psi) + beta * run_raw(c, phi);
                CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
            }
            const Distribution d = run_distribution(c, state_from_amplitudes(psi));
            CHECK(std::abs(d.probabilities.sum() - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("marginalization equals the full distribution without ancilla") {
    std::mt19937_64 rng(47);
    const StateVector psi = state_from_amplitudes(oracle::random_state(16, rng));
    const Distribution d = probabilities(psi, 4);
    CHECK(std::abs(d.probabilities.sum() - 1.0) < 1e-12);
    for (int x = 0; x < 16; ++x) {
        CHECK(d[x] == doctest::Approx(std::norm(psi[x])).epsilon(1e-14));
    }
}

TEST_CASE("K4 periodicity") {
    const auto k4 = standard_graph(GraphKind::Complete, 4);
    for (const CVector &init : k4_initial_states()) {
        const StateVector psi = state_from_amplitudes(init);
        for (int k = 0; k <= 8; ++k) {
            const double t = k * kPi / 8;
            const Distribution a = run_distribution(compile_ctqw(k4, t), psi);
            const Distribution b = run_distribution(compile_ctqw(k4, t + kPi / 2), psi);
            CHECK((a.probabilities - b.probabilities).cwiseAbs().maxCoeff() <= 1e-9);
        }
    }
}
