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

#include "cohkit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "cohkit/coherence.hpp"
#include "cohkit/witness.hpp"

namespace cohkit {

void validate_record(const ExperimentRecord &rec) {
    auto bad = [&](const std::string &why) {
        throw Error(ErrorCode::RangeError, "record '" + rec.label + "': " + why);
    };
    auto unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
    if (rec.photons < 1) bad("photon count must be positive");
    if (!unit(rec.fidelity)) bad("fidelity outside [0, 1]");
    if (!unit(rec.population)) bad("population outside [0, 1]");
    if (!(rec.fidelity_err >= 0.0) || !std::isfinite(rec.fidelity_err)) bad("negative fidelity error");
    if (!(rec.population_err >= 0.0) || !std::isfinite(rec.population_err)) bad("negative population error");
    if (rec.decimals < 0 || rec.decimals > 9) bad("display precision outside 0..9");
}

Estimate ghz_bound_w3(const ExperimentRecord &rec) {
    validate_record(rec);
    return {rec.fidelity - 0.5, rec.fidelity_err};
}

Estimate ghz_bound_w1(const ExperimentRecord &rec) {
    validate_record(rec);
    return {rec.fidelity - 0.5 * rec.population,
            rec.fidelity_err + 0.5 * rec.population_err};
}

std::vector<BoundRow> reproduce_table1(const std::vector<ExperimentRecord> &records) {
    if (records.empty()) throw Error(ErrorCode::EmptyInput, "no experiment records");
    std::vector<BoundRow> rows;
    rows.reserve(records.size());
    for (const auto &rec : records) {
        rows.push_back({rec.label, ghz_bound_w3(rec), ghz_bound_w1(rec), rec.decimals});
    }
    return rows;
}

namespace {

// Quantity in units of 10^-(decimals+2), so the tie digit is exact for
// inputs carrying at most one more decimal than displayed.
long long scaled(double x, int decimals) {
    return std::llround(std::abs(x) * std::pow(10.0, decimals + 2));
}

std::string fixed_point(long long units, int decimals) {
    long long p = 1;
    for (int i = 0; i < decimals; ++i) p *= 10;
    std::ostringstream os;
    os << units / p;
    if (decimals > 0) os << '.' << std::setw(decimals) << std::setfill('0') << units % p;
    return os.str();
}

} // namespace

std::string format_with_uncertainty(double value, double err, int decimals) {
    const long long v = scaled(value, decimals);
    long long vq = v / 100;
    if (v % 100 > 50) ++vq;
    const long long e = scaled(err, decimals);
    long long eq = e / 100;
    if (e % 100 >= 50) ++eq;
    std::string out = (value < 0.0 && vq != 0) ? "-" : "";
    out += fixed_point(vq, decimals);
    out += "(" + std::to_string(eq) + ")";
    return out;
}

std::string render_table1(const std::vector<ExperimentRecord> &records,
                          const std::vector<BoundRow> &rows) {
    if (records.size() != rows.size()) {
        throw Error(ErrorCode::DimensionMismatch, "records and rows differ in length");
    }
    std::vector<std::vector<std::string>> cells(5);
    cells[0].push_back("rho(N)");
    cells[1].push_back("F_N");
    cells[2].push_back("<P_N>");
    cells[3].push_back("-Tr(rho W3)");
    cells[4].push_back("-Tr(rho W1)");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &rec = records[i];
        const int k = rows[i].decimals;
        cells[0].push_back(rows[i].label);
        cells[1].push_back(format_with_uncertainty(rec.fidelity, rec.fidelity_err, k));
        cells[2].push_back(format_with_uncertainty(rec.population, rec.population_err, k));
        cells[3].push_back(
            format_with_uncertainty(rows[i].bound_w3.value, rows[i].bound_w3.err, k));
        cells[4].push_back(
            format_with_uncertainty(rows[i].bound_w1.value, rows[i].bound_w1.err, k));
    }
    std::vector<std::size_t> width(rows.size() + 1, 0);
    for (const auto &line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream os;
    for (const auto &line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c == 0) {
                os << std::left << std::setw(static_cast<int>(width[c])) << line[c];
            } else {
                os << "  " << std::right << std::setw(static_cast<int>(width[c])) << line[c];
            }
        }
        os << '\n';
    }
    return os.str();
}

PureState ghz_state(int photons) {
    if (photons < 1 || photons > 20) {
        throw Error(ErrorCode::RangeError, "photon count must lie in 1..20");
    }
    const std::size_t d = std::size_t{1} << photons;
    std::vector<Complex> a(d);
    a.front() = std::numbers::sqrt2 / 2.0;
    a.back() = std::numbers::sqrt2 / 2.0;
    return PureState::make(std::move(a));
}

GhzCrosscheck ghz_dense_crosscheck(int photons, double mixing) {
    if (photons > kMaxDenseGhzPhotons) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "dense GHZ cross-check is capped at N = " +
                        std::to_string(kMaxDenseGhzPhotons));
    }
    if (photons < 2) throw Error(ErrorCode::RangeError, "need at least 2 photons");
    if (!(mixing >= 0.0 && mixing <= 1.0)) {
        throw Error(ErrorCode::RangeError, "mixing weight must lie in [0, 1]");
    }
    const auto ghz = ghz_state(photons);
    const std::size_t d = ghz.dim();
    const auto proj = ghz.projector();
    const auto rho = DensityMatrix::mix(mixing, proj, DensityMatrix::maximally_mixed(d));

    std::vector<double> pn(d, 0.0);
    pn.front() = 1.0;
    pn.back() = 1.0;
    const auto population_projector = HermitianOperator::diagonal(pn);

    GhzCrosscheck out;
    out.photons = photons;
    out.mixing = mixing;
    const auto dephased = dephase(proj.op());
    const auto expected = 0.5 * population_projector;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            out.dephased_projector_error =
                std::max(out.dephased_projector_error, std::abs(dephased(j, k) - expected(j, k)));

    out.fidelity = sandwich(ghz.amplitudes(), rho.op(), ghz.amplitudes()).real();
    out.population = expectation(population_projector, rho);
    out.dense_w3 = -expectation(w3(ghz), rho);
    out.dense_w1 = -expectation(w1(proj), rho);
    out.analytic_w3 = out.fidelity - 0.5;
    out.analytic_w1 = out.fidelity - 0.5 * out.population;
    out.max_deviation = std::max({std::abs(out.dense_w3 - out.analytic_w3),
                                  std::abs(out.dense_w1 - out.analytic_w1),
                                  out.dephased_projector_error});
    return out;
}

DensityMatrix qutrit_family_state(double p, double varphi, double phi1, double phi2) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::RangeError, "p must lie in [0, 1]");
    if (!std::isfinite(varphi) || !std::isfinite(phi1) || !std::isfinite(phi2)) {
        throw Error(ErrorCode::RangeError, "angles must be finite");
    }
    const double c = std::cos(varphi) / std::numbers::sqrt2;
    const auto phi = PureState::normalized(
        {Complex(c), c * std::polar(1.0, phi1), std::sin(varphi) * std::polar(1.0, phi2)});
    return DensityMatrix::mix(p, phi.projector(), DensityMatrix::maximally_mixed(3));
}

double qutrit_family_c_l1(double p, double varphi) {
    const double c = std::cos(varphi);
    const double s = std::sin(varphi);
    return p * (c * c + 2.0 * std::numbers::sqrt2 * std::abs(c * s));
}

std::vector<Fig1Point> fig1_series(const Fig1Config &cfg) {
    if (cfg.samples < 0) throw Error(ErrorCode::RangeError, "sample count must be >= 0");
    std::vector<Fig1Point> out;
    out.reserve(cfg.grid.size());
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
        const double v = cfg.grid[i];
        const auto rho = qutrit_family_state(cfg.p, v, cfg.phi1, cfg.phi2);
        Fig1Point pt;
        pt.varphi = v;
        pt.c_l1 = qutrit_family_c_l1(cfg.p, v);
        pt.optimal_bound = bound_l1(rho, w2_optimal(rho));
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                          static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        pt.sampled.reserve(static_cast<std::size_t>(cfg.samples));
        for (int s = 0; s < cfg.samples; ++s) {
            std::vector<double> theta(PhaseMatrix::pair_count(3));
            for (auto &t : theta) t = angle(rng);
            pt.sampled.push_back(bound_l1(rho, PhaseMatrix(3, std::move(theta))));
        }
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace cohkit
