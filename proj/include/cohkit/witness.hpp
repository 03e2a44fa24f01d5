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
 * @file witness.hpp
 * Coherence witness families and the coherence bounds they certify.
 *
 * A Hermitian W is a coherence witness iff its dephased part is PSD, i.e.
 * Tr(delta W) >= 0 for every incoherent delta. A negative expectation on a
 * state therefore proves the state is coherent.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "cohkit/linalg.hpp"

namespace cohkit {

/// Real angles theta_jk for j < k, stored row-major over the strict upper
/// triangle: (0,1), (0,2), ..., (0,d-1), (1,2), ...
class PhaseMatrix {
  public:
    PhaseMatrix() = default;
    explicit PhaseMatrix(std::size_t dim)
        : dim_(dim), theta_(dim * (dim > 0 ? dim - 1 : 0) / 2, 0.0) {}
    PhaseMatrix(std::size_t dim, std::vector<double> upper);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double operator()(std::size_t j, std::size_t k) const {
        return theta_[index(j, k)];
    }
    void set(std::size_t j, std::size_t k, double theta) { theta_[index(j, k)] = theta; }
    [[nodiscard]] const std::vector<double> &upper() const noexcept { return theta_; }
    [[nodiscard]] PhaseMatrix negated() const;

    static std::size_t pair_count(std::size_t dim) { return dim * (dim - 1) / 2; }

  private:
    [[nodiscard]] std::size_t index(std::size_t j, std::size_t k) const;
    std::size_t dim_ = 0;
    std::vector<double> theta_;
};

/// Angles of the symmetric/antisymmetric Gell-Mann pair per j < k, wrapped
/// into [0, 2 pi).
class GellMannCoefficients {
  public:
    GellMannCoefficients() = default;
    GellMannCoefficients(std::size_t dim, std::vector<double> upper);

    [[nodiscard]] std::size_t dim() const noexcept { return angles_.dim(); }
    [[nodiscard]] double operator()(std::size_t j, std::size_t k) const {
        return angles_(j, k);
    }
    [[nodiscard]] const PhaseMatrix &angles() const noexcept { return angles_; }

  private:
    PhaseMatrix angles_;
};

enum class BoundKind { None, Robustness, L1 };

struct WitnessReport {
    HermitianOperator witness;
    double expectation = 0.0;
    bool detected = false;
    BoundKind bound_kind = BoundKind::None;
    double bound_value = 0.0;
};

inline constexpr double kDetectionTol = 1e-10;

/// W = Delta(A) - A; zero diagonal for every Hermitian A.
HermitianOperator construct_witness(const HermitianOperator &a);

/// True iff Delta(W) is PSD within tol.
bool validate_witness(const HermitianOperator &w, double tol = kPsdTol);

HermitianOperator w1(const DensityMatrix &sigma);
HermitianOperator w2(const PhaseMatrix &phases);
/// Phases that saturate the l1 bound on rho: theta_jk = arg(rho_jk) + pi.
PhaseMatrix w2_optimal(const DensityMatrix &rho);
/// |lambda_max|^2 1 - |phi><phi|.
HermitianOperator w3(const PureState &phi);
/// sum_{j<k} cos(theta_jk) sigma_s^jk + sin(theta_jk) sigma_a^jk.
HermitianOperator w4(const GellMannCoefficients &coeffs);
GellMannCoefficients w4_optimal(const DensityMatrix &rho);

/// -Tr(rho W), a lower bound on C_R(rho). Requires W to be a witness
/// (NotAWitness) with W <= 1 (WitnessExceedsIdentity).
double bound_robustness(const HermitianOperator &w, const DensityMatrix &rho,
                        double tol = kPsdTol);

/// -Tr(rho W2(phases)), a lower bound on C_l1(rho).
double bound_l1(const DensityMatrix &rho, const PhaseMatrix &phases);

/// <phi|rho|phi> - Tr[rho Delta(|phi><phi|)].
double fidelity_bound(const DensityMatrix &rho, const PureState &phi);

struct W1W3Comparison {
    HermitianOperator difference; ///< W3 - W1, diagonal
    bool is_psd = false;
};

W1W3Comparison compare_w1_w3(const PureState &phi);

/// Packages Tr(rho W) together with the detection verdict and, when `kind`
/// is not None, the bound it certifies.
WitnessReport evaluate_witness(const HermitianOperator &w, const DensityMatrix &rho,
                               BoundKind kind, double detection_tol = kDetectionTol);

} // namespace cohkit
