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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cohkit/coherence.hpp"
#include "cohkit/metrology.hpp"
#include "oracles.hpp"

using namespace cohkit;

namespace {

Hamiltonian ladder() { return Hamiltonian({0.0, 1.0, 2.0, 3.0}); }

std::vector<double> probes(const Hamiltonian &h, int n) {
    const double half = std::numbers::pi / h.spread();
    std::vector<double> p(n);
    for (int i = 0; i < n; ++i) p[i] = half * i / n;
    return p;
}

} // namespace

TEST_CASE("Hamiltonian validation") {
    CHECK_THROWS_AS(Hamiltonian({0.0, 0.0, 1.0}), Error);
    try {
        Hamiltonian({0.0, 0.0, 1.0});
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DegenerateSpectrum);
    }
    CHECK_THROWS_AS(Hamiltonian({0.0, std::nan("")}), Error);
    Hamiltonian h({2.0, -1.0, 5.0});
    CHECK(h.argmax() == 2);
    CHECK(h.argmin() == 1);
    CHECK(h.spread() == 6.0);
}

TEST_CASE("signal at d = 4, phi = 0.7") {
    auto h = ladder();
    CHECK(expected_signal(h, 0.7) == doctest::Approx(-0.5 * std::cos(2.1)).epsilon(1e-14));
    CHECK(expected_signal(h, 0.7) == doctest::Approx(0.25245).epsilon(1e-4));
    for (int i = 0; i < 100; ++i) {
        const double phi = -3.0 + 0.07 * i;
        CHECK(std::abs(expected_signal(h, phi) - matrix_signal(h, phi)) <= 1e-12);
    }
}

TEST_CASE("evolve conserves c_l1 and populations") {
    std::mt19937_64 rng(41);
    auto rho = oracle::to_density(oracle::ginibre_state(rng, 4), 4);
    auto h = ladder();
    for (double phi : {0.0, 0.3, 1.7, -4.0}) {
        auto out = evolve(rho, h, phi);
        CHECK(std::abs(c_l1(out) - c_l1(rho)) <= 1e-12);
        for (std::size_t i = 0; i < 4; ++i) CHECK(out(i, i) == rho(i, i));
        const Complex e = rho(0, 3) * std::polar(1.0, -(0.0 - 3.0) * phi);
        CHECK(std::abs(out(0, 3) - e) <= 1e-15);
    }
    CHECK_FALSE(coherence_usable(DensityMatrix::maximally_mixed(4)));
    CHECK(coherence_usable(maximally_coherent(4).projector()));
}

TEST_CASE("noiseless estimation recovers the phase") {
    auto h = ladder();
    auto s = simulate_samples(h, 0.7, probes(h, 20), 0.0, 1);
    auto e = estimate_phase(s, h, 0.0, std::numbers::pi / 3.0);
    CHECK(std::abs(e.phi_hat - 0.7) <= 1e-6);
    CHECK(e.rms_residual <= 1e-9);
}

TEST_CASE("noisy estimation") {
    auto h = ladder();
    std::vector<double> err;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto s = simulate_samples(h, 0.7, probes(h, 20), 0.01, seed);
        err.push_back(std::abs(estimate_phase(s, h, 0.0, std::numbers::pi / 3.0).phi_hat - 0.7));
    }
    std::nth_element(err.begin(), err.begin() + 25, err.end());
    CHECK(err[25] <= 1e-2);
    // Same seed, same readings.
    auto a = simulate_samples(h, 0.7, probes(h, 5), 0.01, 9);
    auto b = simulate_samples(h, 0.7, probes(h, 5), 0.01, 9);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].measured == b[i].measured);
}

TEST_CASE("estimate_phase argument errors") {
    auto h = ladder();
    auto s = simulate_samples(h, 0.7, probes(h, 4), 0.0, 1);
    try {
        estimate_phase(s, h, 0.0, 2.0);
        FAIL("expected IntervalTooWide");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::IntervalTooWide);
    }
    try {
        estimate_phase({}, h, 0.0, 1.0);
        FAIL("expected NoSamples");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NoSamples);
    }
    CHECK_THROWS_AS(estimate_phase(s, h, 1.0, 0.5), Error);
    // Second half-period is also a valid fit window.
    const double half = std::numbers::pi / 3.0;
    auto s2 = simulate_samples(h, 1.4, probes(h, 10), 0.0, 1);
    CHECK(estimate_phase(s2, h, half, 2 * half).phi_hat == doctest::Approx(1.4).epsilon(1e-7));
}

TEST_CASE("example3 witness") {
    auto w = example3_witness(ladder());
    CHECK(w(3, 0) == Complex(-1.0));
    CHECK(w(0, 3) == Complex(-1.0));
    CHECK(w(1, 1) == Complex{});
    CHECK_THROWS_AS(example3_witness(Hamiltonian({1.0})), Error);
}
