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

/**
 * @file metrology.hpp
 * Phase estimation through a black box exp(-i H phi) with H diagonal in the
 * coherence reference basis.
 *
 * The witness W = -|E_max><E_min| - |E_min><E_max| evaluated on the evolved
 * maximally coherent state gives the signal -(2/d) cos((E_max - E_min) phi),
 * which estimate_phase() inverts by least squares.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cohkit/linalg.hpp"

namespace cohkit {

class Hamiltonian {
  public:
    /// Throws DegenerateSpectrum if two energies are closer than
    /// kDegeneracyTol times the spectral spread.
    explicit Hamiltonian(std::vector<double> energies);

    [[nodiscard]] std::size_t dim() const noexcept { return energies_.size(); }
    [[nodiscard]] std::span<const double> energies() const noexcept { return energies_; }
    [[nodiscard]] std::size_t argmax() const noexcept { return imax_; }
    [[nodiscard]] std::size_t argmin() const noexcept { return imin_; }
    [[nodiscard]] double spread() const noexcept {
        return energies_[imax_] - energies_[imin_];
    }

  private:
    std::vector<double> energies_;
    std::size_t imax_ = 0;
    std::size_t imin_ = 0;
};

inline constexpr double kDegeneracyTol = 1e-9;

/// rho_jk -> rho_jk exp(-i (E_j - E_k) phi).
DensityMatrix evolve(const DensityMatrix &rho_in, const Hamiltonian &h, double phi);

PureState maximally_coherent(std::size_t dim);

/// True iff C_l1(rho_in) > tol, i.e. the output depends on phi.
bool coherence_usable(const DensityMatrix &rho_in, double tol = 1e-12);

/// -|E_max><E_min| - |E_min><E_max|.
HermitianOperator example3_witness(const Hamiltonian &h);

/// -(2/d) cos((E_max - E_min) phi).
double expected_signal(const Hamiltonian &h, double phi);
/// Same quantity through the dense path: Tr(W evolve(|+><+|, H, phi)).
double matrix_signal(const Hamiltonian &h, double phi);

/// One witness reading. The black box is queried at unknown phase plus the
/// known offset `probe`, so noiseless readings equal
/// expected_signal(h, phi_true + probe).
struct SignalSample {
    double probe = 0.0;
    double measured = 0.0;
    double noise_sigma = 0.0;
};

struct PhaseEstimate {
    double phi_hat = 0.0;
    double rms_residual = 0.0;
};

/// Least-squares fit of the cosine model over [lo, hi] by a 1000-point grid
/// scan followed by golden-section refinement. The interval must fit inside
/// a single monotone half-period [k pi/dE, (k+1) pi/dE] (IntervalTooWide).
PhaseEstimate estimate_phase(std::span<const SignalSample> samples, const Hamiltonian &h,
                             double lo, double hi);

/// Readings at the given probe offsets with additive Gaussian noise of
/// standard deviation `noise_sigma` drawn from a generator seeded by `seed`.
std::vector<SignalSample> simulate_samples(const Hamiltonian &h, double phi_true,
                                           std::span<const double> probes,
                                           double noise_sigma, std::uint64_t seed);

} // namespace cohkit
