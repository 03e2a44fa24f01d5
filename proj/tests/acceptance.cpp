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

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Takes the bundled record CSV as its only argument.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cohkit/coherence.hpp"
#include "cohkit/experiments.hpp"
#include "cohkit/io.hpp"
#include "cohkit/metrology.hpp"
#include "cohkit/witness.hpp"
#include "oracles.hpp"

using namespace cohkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

DensityMatrix projector_of(const std::vector<Complex> &v) { return PureState::make(v).projector(); }

// --------------------------------------------------------------- criterion 1

Outcome table1(const std::string &csv) {
    const auto t0 = Clock::now();
    const auto records = io::read_records_csv(csv);
    const auto rows = reproduce_table1(records);
    const auto text = render_table1(records, rows);
    const double elapsed = seconds_since(t0);

    const double w3[] = {0.210, 0.144, 0.208, 0.090, 0.073};
    const double w1[] = {0.3055, 0.269, 0.305, 0.215, 0.219};
    const double w3e[] = {0.016, 0.022, 0.016, 0.02, 0.023};
    const double w1e[] = {0.0235, 0.0385, 0.021, 0.035, 0.042};
    const char *s3[] = {"0.210(16)", "0.144(22)", "0.208(16)", "0.09(2)", "0.073(23)"};
    const char *s1[] = {"0.305(24)", "0.269(39)", "0.305(21)", "0.21(4)", "0.219(42)"};

    Outcome o;
    if (rows.size() != 5) return {false, "expected 5 rows"};
    double dev = 0;
    int bad_strings = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        dev = std::max({dev, std::abs(rows[i].bound_w3.value - w3[i]),
                        std::abs(rows[i].bound_w1.value - w1[i]),
                        std::abs(rows[i].bound_w3.err - w3e[i]),
                        std::abs(rows[i].bound_w1.err - w1e[i])});
        const int k = rows[i].decimals;
        if (format_with_uncertainty(rows[i].bound_w3.value, rows[i].bound_w3.err, k) != s3[i])
            ++bad_strings;
        if (format_with_uncertainty(rows[i].bound_w1.value, rows[i].bound_w1.err, k) != s1[i])
            ++bad_strings;
        if (text.find(s3[i]) == std::string::npos || text.find(s1[i]) == std::string::npos)
            ++bad_strings;
    }
    o.pass = dev <= 1e-12 && bad_strings == 0 && elapsed < 0.1;
    o.detail = fmt("max |dev| %.1e, string mismatches %.0f, %.4f s", dev, bad_strings, elapsed);
    return o;
}

// --------------------------------------------------------------- criterion 2

Outcome w1_w3_ordering() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2002);
    double worst = 1e300;
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 7);
        const auto phi = PureState::make(oracle::haar_vector(rng, d));
        const auto rho = oracle::to_density(oracle::ginibre_state(rng, d), d);
        worst = std::min(worst, expectation(w3(phi), rho) - expectation(w1(phi.projector()), rho));
    }
    // Strictness: scan mixtures of a biased qubit state with white noise.
    const std::vector<Complex> v{std::sqrt(0.9), std::sqrt(0.1)};
    const auto phi = PureState::make(v);
    int found = 0;
    double q_found = -1;
    for (int k = 0; k <= 100; ++k) {
        const double q = k / 100.0;
        const auto rho = DensityMatrix::mix(q, phi.projector(), DensityMatrix::maximally_mixed(2));
        const double t3 = expectation(w3(phi), rho), t1 = expectation(w1(phi.projector()), rho);
        if (t3 >= 0 && t1 < 0) {
            ++found;
            if (q_found < 0) q_found = q;
        }
    }
    const double elapsed = seconds_since(t0);
    Outcome o;
    o.pass = worst >= -1e-10 && found > 0 && elapsed < 5.0;
    o.detail = fmt("min Tr(rho(W3-W1)) %.2e, strict pairs %.0f (first q=%.2f)", worst, found,
                   q_found) +
               fmt(", %.3f s", elapsed);
    return o;
}

// --------------------------------------------------------------- criterion 3

Outcome robustness_chain() {
    std::mt19937_64 rng(3003);
    double worst_order = 1e300, worst_w1 = 0, worst_gap = 0, slowest = 0;
    int unconverged = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 5);
        const auto raw = oracle::ginibre_state(rng, d);
        const auto rho = oracle::to_density(raw, d);
        const double l2 = oracle::l2(raw, d);
        const auto t0 = Clock::now();
        const auto r = robustness(rho);
        slowest = std::max(slowest, seconds_since(t0));
        if (!r.converged) ++unconverged;
        worst_order = std::min(worst_order, r.value - (l2 - 1e-6));
        worst_w1 = std::max(worst_w1, std::abs(-expectation(w1(rho), rho) - l2));
        worst_gap = std::max(worst_gap, r.gap);
    }
    Outcome o;
    o.pass = worst_order >= 0 && worst_w1 <= 1e-12 && worst_gap <= 1e-6 && unconverged == 0 &&
             slowest < 0.5;
    o.detail = fmt("min C_R-C_l2+1e-6 %.2e, max |-Tr(rhoW1)-C_l2| %.1e, max gap %.1e", worst_order,
                   worst_w1, worst_gap) +
               fmt(", slowest %.4f s", slowest);
    return o;
}

// --------------------------------------------------------------- criterion 4

std::vector<Complex> pure_raw(std::mt19937_64 &rng, std::size_t d, oracle::Dense &raw) {
    auto v = oracle::haar_vector(rng, d);
    raw.assign(d * d, {});
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) raw[j * d + k] = v[j] * std::conj(v[k]);
    return v;
}

Outcome pure_state_identity() {
    std::mt19937_64 rng(4004);
    // Confirm C_R = C_l1 for pure states with the brute-force oracle first.
    double oracle_dev = 0;
    for (std::size_t d : {2u, 3u})
        for (int i = 0; i < 20; ++i) {
            oracle::Dense raw;
            pure_raw(rng, d, raw);
            oracle_dev = std::max(oracle_dev, std::abs(oracle::robustness_bruteforce(raw, d) -
                                                       oracle::l1(raw, d)));
        }
    if (oracle_dev > 1e-6)
        return {false, fmt("oracle disagrees with the pure-state identity: %.2e", oracle_dev)};

    double dev = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 5);
        oracle::Dense raw;
        const auto v = pure_raw(rng, d, raw);
        dev = std::max(dev, std::abs(robustness(projector_of(v)).value - oracle::l1(raw, d)));
    }
    Outcome o;
    o.pass = dev <= 1e-5;
    o.detail = fmt("oracle vs C_l1 %.1e (d=2,3), max |C_R - C_l1| %.1e", oracle_dev, dev);
    return o;
}

// --------------------------------------------------------------- criterion 5

Outcome fig1() {
    const auto t0 = Clock::now();
    Fig1Config cfg;
    cfg.p = 0.1;
    cfg.phi1 = 0.2;
    cfg.phi2 = 0.3;
    cfg.samples = 1000;
    cfg.seed = 5005;
    for (int i = 0; i < 50; ++i) cfg.grid.push_back(std::numbers::pi * i / 49.0);
    const auto pts = fig1_series(cfg);
    const double elapsed = seconds_since(t0);
    double excess = -1e300, opt_dev = 0;
    for (const auto &p : pts) {
        const double cf = qutrit_family_c_l1(cfg.p, p.varphi);
        for (double s : p.sampled) excess = std::max(excess, s - cf);
        opt_dev = std::max(opt_dev, std::abs(p.optimal_bound - cf));
    }
    Outcome o;
    o.pass = pts.size() == 50 && excess <= 1e-12 && opt_dev <= 1e-12 && elapsed < 10.0;
    o.detail = fmt("max (sample - C_l1) %.2e, optimal dev %.1e, %.3f s", excess, opt_dev, elapsed);
    return o;
}

// --------------------------------------------------------------- criterion 6

Outcome soundness() {
    std::mt19937_64 rng(6006);
    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
    double worst[5] = {1e300, 1e300, 1e300, 1e300, 1e300};
    double t1_abs = 0;
    for (std::size_t d = 2; d <= 6; ++d) {
        const std::size_t pairs = PhaseMatrix::pair_count(d);
        for (int i = 0; i < 200; ++i) {
            const auto delta = DensityMatrix::diagonal(oracle::random_populations(rng, d));
            std::vector<double> t(pairs), u(pairs);
            for (auto &x : t) x = ang(rng);
            for (auto &x : u) x = ang(rng);
            const HermitianOperator ws[5] = {
                construct_witness(oracle::to_hermitian(oracle::random_hermitian(rng, d), d)),
                w1(oracle::to_density(oracle::ginibre_state(rng, d), d)),
                w2(PhaseMatrix(d, t)),
                w3(PureState::make(oracle::haar_vector(rng, d))),
                w4(GellMannCoefficients(d, u)),
            };
            for (int k = 0; k < 5; ++k) worst[k] = std::min(worst[k], expectation(ws[k], delta));
            t1_abs = std::max(t1_abs, std::abs(expectation(ws[0], delta)));
        }
    }
    const double min_all = *std::min_element(worst, worst + 5);
    Outcome o;
    o.pass = min_all >= -1e-12 && t1_abs <= 1e-14;
    o.detail = fmt("min Tr(delta W) over families %.2e, generic-family max |Tr| %.1e", min_all, t1_abs);
    return o;
}

// --------------------------------------------------------------- criterion 7

Outcome metrology() {
    const Hamiltonian h({0.0, 1.0, 2.0, 3.0});
    double sig_dev = 0;
    for (int i = 0; i < 100; ++i) {
        const double phi = 2 * std::numbers::pi * i / 99.0;
        sig_dev = std::max(sig_dev, std::abs(expected_signal(h, phi) - matrix_signal(h, phi)));
    }
    const double half = std::numbers::pi / h.spread();
    std::vector<double> probes(20);
    for (int i = 0; i < 20; ++i) probes[i] = half * i / 20;
    const auto clean = simulate_samples(h, 0.7, probes, 0.0, 1);
    const double noiseless = std::abs(estimate_phase(clean, h, 0.0, half).phi_hat - 0.7);
    std::vector<double> err;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto noisy = simulate_samples(h, 0.7, probes, 0.01, 7000 + s);
        err.push_back(std::abs(estimate_phase(noisy, h, 0.0, half).phi_hat - 0.7));
    }
    std::sort(err.begin(), err.end());
    const double median = 0.5 * (err[24] + err[25]);

    std::mt19937_64 rng(7007);
    double cons = 0;
    for (int i = 0; i < 20; ++i) {
        const auto raw = oracle::ginibre_state(rng, 4);
        const auto rho = oracle::to_density(raw, 4);
        const double before = oracle::l1(raw, 4);
        const auto out = evolve(rho, h, 0.37 * i);
        cons = std::max(cons, std::abs(oracle::l1(oracle::from(out.op()), 4) - before));
    }
    Outcome o;
    o.pass = sig_dev <= 1e-12 && noiseless <= 1e-6 && median <= 1e-2 && cons <= 1e-12;
    o.detail = fmt("signal dev %.1e, noiseless err %.1e, median noisy err %.1e", sig_dev,
                   noiseless, median) +
               fmt(", C_l1 drift %.1e", cons);
    return o;
}

// --------------------------------------------------------------- criterion 8

Outcome ghz() {
    double dev = 0;
    for (int n = 2; n <= 8; ++n)
        for (double q : {0.0, 0.25, 0.6, 0.8, 0.95, 1.0}) {
            const auto g = ghz_dense_crosscheck(n, q);
            const double d = std::ldexp(1.0, n);
            const double f = q + (1 - q) / d;
            const double p = q + 2 * (1 - q) / d;
            dev = std::max({dev, std::abs(g.dense_w3 - (f - 0.5)), std::abs(g.dense_w1 - (f - p / 2)),
                            std::abs(g.analytic_w3 - (f - 0.5)),
                            std::abs(g.analytic_w1 - (f - p / 2)), g.max_deviation});
        }
    Outcome o;
    o.pass = dev <= 1e-12;
    o.detail = fmt("max deviation %.1e over N=2..8", dev);
    return o;
}

// --------------------------------------------------------------- criterion 9

Outcome eigensolver() {
    std::mt19937_64 rng(9009);
    double resid = 0, tr1 = 0, tr2 = 0;
    for (std::size_t d : {2u, 3u, 5u, 8u, 16u, 32u, 48u, 64u})
        for (int rep = 0; rep < 3; ++rep) {
            const auto a = oracle::to_hermitian(oracle::random_hermitian(rng, d), d);
            const auto e = eigh(a);
            const double nf = a.frobenius_norm();
            Matrix lam(d);
            for (std::size_t i = 0; i < d; ++i) lam(i, i) = e.values[i];
            resid = std::max(resid,
                             (e.vectors * lam * e.vectors.adjoint() - a.matrix()).frobenius_norm() / nf);
            double s1 = 0, s2 = 0;
            for (double l : e.values) {
                s1 += l;
                s2 += l * l;
            }
            tr1 = std::max(tr1, std::abs(s1 - a.trace()) / nf);
            tr2 = std::max(tr2, std::abs(s2 - nf * nf) / (nf * nf));
        }
    Outcome o;
    o.pass = resid <= 1e-9 && tr1 <= 1e-10 && tr2 <= 1e-10;
    o.detail = fmt("residual/|A|_F %.1e, trace dev %.1e, trace(A^2) dev %.1e", resid, tr1, tr2);
    return o;
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <table1.csv>\n");
        return 2;
    }
    const std::string csv = argv[1];
    struct Item {
        int id;
        const char *name;
        std::function<Outcome()> run;
    };
    const Item items[] = {
        {1, "GHZ bound table", [&] { return table1(csv); }},
        {2, "W1 dominates W3", w1_w3_ordering},
        {3, "robustness >= l2 chain", robustness_chain},
        {4, "pure-state robustness = l1", pure_state_identity},
        {5, "sampled l1 bounds", fig1},
        {6, "witness soundness", soundness},
        {7, "metrology round trip", metrology},
        {8, "GHZ dense cross-check", ghz},
        {9, "eigensolver quality", eigensolver},
    };
    int failed = 0;
    for (const auto &it : items) {
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s  [%d] %-28s %s\n", o.pass ? "PASS" : "FAIL", it.id, it.name,
                    o.detail.c_str());
    }
    std::printf("%d/9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
