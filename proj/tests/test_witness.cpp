// Copyright 2026 The cohkit Authors
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

#include <numbers>
#include <random>

#include "cohkit/coherence.hpp"
#include "cohkit/witness.hpp"
#include "oracles.hpp"

using namespace cohkit;

namespace {

std::vector<double> uniform_angles(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    std::vector<double> t(n);
    for (auto &x : t) x = u(rng);
    return t;
}

} // namespace

TEST_CASE("PhaseMatrix indexing") {
    PhaseMatrix p(4);
    CHECK(p.upper().size() == 6);
    p.set(0, 1, 1.0);
    p.set(1, 3, 2.0);
    p.set(2, 3, 3.0);
    CHECK(p.upper()[0] == 1.0);
    CHECK(p.upper()[4] == 2.0);
    CHECK(p.upper()[5] == 3.0);
    CHECK(p.negated()(1, 3) == -2.0);
    CHECK_THROWS_AS(PhaseMatrix(3, {1.0, 2.0}), Error);
}

TEST_CASE("construct_witness is traceless on incoherent states") {
    std::mt19937_64 rng(31);
    auto a = oracle::to_hermitian(oracle::random_hermitian(rng, 5), 5);
    auto w = construct_witness(a);
    for (std::size_t i = 0; i < 5; ++i) CHECK(w(i, i) == Complex{});
    CHECK(w(0, 3) == -a(0, 3));
    CHECK(validate_witness(w));
    auto delta = DensityMatrix::diagonal(oracle::random_populations(rng, 5));
    CHECK(std::abs(expectation(w, delta)) <= 1e-14);
}

TEST_CASE("validate_witness rejects negative dephased part") {
    auto w = HermitianOperator::diagonal(std::vector<double>{1.0, -0.1});
    CHECK_FALSE(validate_witness(w));
    try {
        bound_robustness(w, DensityMatrix::maximally_mixed(2));
        FAIL("expected NotAWitness");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotAWitness);
    }
    auto big = 2.0 * HermitianOperator::identity(2);
    try {
        bound_robustness(big, DensityMatrix::maximally_mixed(2));
        FAIL("expected WitnessExceedsIdentity");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::WitnessExceedsIdentity);
    }
    try {
        bound_robustness(HermitianOperator::zeros(3), DensityMatrix::maximally_mixed(2));
        FAIL("expected DimensionMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("w1 with sigma = rho gives c_l2") {
    std::mt19937_64 rng(32);
    for (std::size_t d = 2; d <= 6; ++d) {
        auto raw = oracle::ginibre_state(rng, d);
        auto rho = oracle::to_density(raw, d);
        auto w = w1(rho);
        CHECK(std::abs(-expectation(w, rho) - oracle::l2(raw, d)) <= 1e-12);
        CHECK(bound_robustness(w, rho) == doctest::Approx(c_l2(rho)).epsilon(1e-12));
    }
}

TEST_CASE("w2 at optimal phases saturates c_l1; random phases stay below") {
    std::mt19937_64 rng(33);
    for (std::size_t d = 2; d <= 6; ++d) {
        auto raw = oracle::ginibre_state(rng, d);
        auto rho = oracle::to_density(raw, d);
        auto opt = w2_optimal(rho);
        CHECK(bound_l1(rho, opt) == doctest::Approx(oracle::l1(raw, d)).epsilon(1e-12));
        CHECK(-expectation(w2(opt), rho) == doctest::Approx(bound_l1(rho, opt)).epsilon(1e-12));
        for (int s = 0; s < 50; ++s) {
            PhaseMatrix p(d, uniform_angles(rng, PhaseMatrix::pair_count(d)));
            CHECK(bound_l1(rho, p) <= oracle::l1(raw, d) + 1e-12);
        }
    }
}

TEST_CASE("w4 is w2 with negated angles") {
    std::mt19937_64 rng(34);
    const std::size_t d = 4;
    auto t = uniform_angles(rng, PhaseMatrix::pair_count(d));
    GellMannCoefficients g(d, t);
    auto lhs = w4(g);
    auto rhs = w2(PhaseMatrix(d, t).negated());
    CHECK((lhs - rhs).frobenius_norm() <= 1e-14);

    // Angle form against the symmetric / antisymmetric decomposition: with
    // b_s = 2 Re rho_jk and b_a = -2 Im rho_jk, Tr(rho W4) = sum |b| cos(t - psi).
    auto rho = oracle::to_density(oracle::ginibre_state(rng, d), d);
    double expect = 0;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            const double bs = 2 * rho(j, k).real(), ba = -2 * rho(j, k).imag();
            expect += std::hypot(bs, ba) * std::cos(g(j, k) - std::atan2(ba, bs));
        }
    CHECK(expectation(lhs, rho) == doctest::Approx(expect).epsilon(1e-12));

    auto opt = w4_optimal(rho);
    CHECK(-expectation(w4(opt), rho) == doctest::Approx(c_l1(rho)).epsilon(1e-12));
}

TEST_CASE("w3 and fidelity bound") {
    std::mt19937_64 rng(35);
    const std::size_t d = 3;
    auto phi = PureState::make(oracle::haar_vector(rng, d));
    auto w = w3(phi);
    CHECK(validate_witness(w, 1e-12));
    auto rho = oracle::to_density(oracle::ginibre_state(rng, d), d);
    const double lmax = phi.max_modulus();
    const double fid = sandwich(phi.amplitudes(), rho.op(), phi.amplitudes()).real();
    CHECK(expectation(w, rho) == doctest::Approx(lmax * lmax - fid).epsilon(1e-12));
    // fidelity_bound is -Tr(rho W1(sigma = |phi><phi|)).
    CHECK(fidelity_bound(rho, phi) ==
          doctest::Approx(-expectation(w1(phi.projector()), rho)).epsilon(1e-12));

    // |phi> = |0>: W3 = 1 - |0><0| has non-negative expectation everywhere.
    auto w0 = w3(PureState::basis(d, 0));
    CHECK(expectation(w0, rho) == doctest::Approx(1.0 - rho(0, 0).real()));
}

TEST_CASE("W3 - W1 is diagonal PSD") {
    std::mt19937_64 rng(36);
    for (std::size_t d = 2; d <= 8; ++d) {
        auto phi = PureState::make(oracle::haar_vector(rng, d));
        auto c = compare_w1_w3(phi);
        CHECK(c.is_psd);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (j != k) CHECK(std::abs(c.difference(j, k)) <= 1e-15);
    }
}

TEST_CASE("evaluate_witness verdicts") {
    std::vector<Complex> plus(3, Complex(1.0 / std::sqrt(3.0)));
    auto rho = PureState::make(plus).projector();
    auto rep = evaluate_witness(w2(w2_optimal(rho)), rho, BoundKind::L1);
    CHECK(rep.detected);
    CHECK(rep.bound_value == doctest::Approx(2.0));

    auto inc = DensityMatrix::maximally_mixed(3);
    auto rep2 = evaluate_witness(w1(rho), inc, BoundKind::Robustness);
    CHECK_FALSE(rep2.detected);

    CHECK_THROWS_AS(evaluate_witness(w1(rho), rho, BoundKind::L1), Error);
}
