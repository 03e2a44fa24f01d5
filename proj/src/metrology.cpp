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

#include "cohkit/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cohkit/coherence.hpp"

namespace cohkit {

Hamiltonian::Hamiltonian(std::vector<double> energies) : energies_(std::move(energies)) {
    if (energies_.empty()) throw Error(ErrorCode::InvalidArgument, "empty spectrum");
    for (double e : energies_) {
        if (!std::isfinite(e)) throw Error(ErrorCode::NonFinite, "energy is not finite");
    }
    imax_ = static_cast<std::size_t>(
        std::max_element(energies_.begin(), energies_.end()) - energies_.begin());
    imin_ = static_cast<std::size_t>(
        std::min_element(energies_.begin(), energies_.end()) - energies_.begin());
    if (energies_.size() < 2) return;
    auto sorted = energies_;
    std::sort(sorted.begin(), sorted.end());
    const double spread = sorted.back() - sorted.front();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const double gap = sorted[i] - sorted[i - 1];
        if (!(gap > kDegeneracyTol * spread) || gap == 0.0) {
            std::ostringstream os;
            os << "energies " << sorted[i - 1] << " and " << sorted[i]
               << " are degenerate";
            throw Error(ErrorCode::DegenerateSpectrum, os.str());
        }
    }
}

DensityMatrix evolve(const DensityMatrix &rho_in, const Hamiltonian &h, double phi) {
    const std::size_t d = rho_in.dim();
    if (h.dim() != d) {
        throw Error(ErrorCode::DimensionMismatch, "Hamiltonian and state dimensions differ");
    }
    std::vector<double> angles(h.energies().begin(), h.energies().end());
    for (auto &a : angles) a *= phi;
    return rho_in.conjugate_by_phases(angles);
}

PureState maximally_coherent(std::size_t dim) {
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    return PureState::make(
        std::vector<Complex>(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)))));
}

bool coherence_usable(const DensityMatrix &rho_in, double tol) { return c_l1(rho_in) > tol; }

HermitianOperator example3_witness(const Hamiltonian &h) {
    if (h.dim() < 2) {
        throw Error(ErrorCode::DegenerateSpectrum, "need at least two distinct energies");
    }
    HermitianBuilder b(h.dim());
    b.set(h.argmax(), h.argmin(), -1.0);
    return b.build();
}

double expected_signal(const Hamiltonian &h, double phi) {
    return -(2.0 / static_cast<double>(h.dim())) * std::cos(h.spread() * phi);
}

double matrix_signal(const Hamiltonian &h, double phi) {
    const auto rho = evolve(maximally_coherent(h.dim()).projector(), h, phi);
    return expectation(example3_witness(h), rho);
}

namespace {

double sum_squares(std::span<const SignalSample> samples, const Hamiltonian &h, double phi) {
    double s = 0.0;
    for (const auto &x : samples) {
        const double r = x.measured - expected_signal(h, phi + x.probe);
        s += r * r;
    }
    return s;
}

} // namespace

PhaseEstimate estimate_phase(std::span<const SignalSample> samples, const Hamiltonian &h,
                             double lo, double hi) {
    if (samples.empty()) throw Error(ErrorCode::NoSamples, "no signal samples");
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
        throw Error(ErrorCode::InvalidArgument, "search interval must satisfy lo < hi");
    }
    if (h.dim() < 2) {
        throw Error(ErrorCode::DegenerateSpectrum, "need at least two distinct energies");
    }
    const double half_period = std::numbers::pi / h.spread();
    const double slack = 1e-12 * std::max(1.0, std::abs(hi) / half_period);
    const double branch = std::floor(lo / half_period + slack);
    if (hi / half_period > branch + 1.0 + slack) {
        std::ostringstream os;
        os << "interval [" << lo << ", " << hi << "] spans more than one monotone "
           << "half-period of length " << half_period;
        throw Error(ErrorCode::IntervalTooWide, os.str());
    }

    constexpr int kGrid = 1000;
    double best_phi = lo;
    double best = sum_squares(samples, h, lo);
    for (int i = 1; i <= kGrid; ++i) {
        const double phi = lo + (hi - lo) * i / kGrid;
        const double f = sum_squares(samples, h, phi);
        if (f < best) {
            best = f;
            best_phi = phi;
        }
    }
    const double step = (hi - lo) / kGrid;
    double a = std::max(lo, best_phi - step);
    double b = std::min(hi, best_phi + step);
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_golden * (b - a);
    double d = a + inv_golden * (b - a);
    double fc = sum_squares(samples, h, c);
    double fd = sum_squares(samples, h, d);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_golden * (b - a);
            fc = sum_squares(samples, h, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_golden * (b - a);
            fd = sum_squares(samples, h, d);
        }
    }
    double phi_hat = 0.5 * (a + b);
    double f = sum_squares(samples, h, phi_hat);
    if (best < f) {
        phi_hat = best_phi;
        f = best;
    }
    return {phi_hat, std::sqrt(f / static_cast<double>(samples.size()))};
}

std::vector<SignalSample> simulate_samples(const Hamiltonian &h, double phi_true,
                                           std::span<const double> probes,
                                           double noise_sigma, std::uint64_t seed) {
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
        throw Error(ErrorCode::InvalidArgument, "noise sigma must be >= 0");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<SignalSample> out;
    out.reserve(probes.size());
    for (double p : probes) {
        double m = expected_signal(h, phi_true + p);
        if (noise_sigma > 0.0) m += noise_sigma * noise(rng);
        out.push_back({p, m, noise_sigma});
    }
    return out;
}

} // namespace cohkit
