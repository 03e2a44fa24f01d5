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

#pragma once

#include <vector>

#include "cohkit/linalg.hpp"

namespace cohkit {

/// Keeps the diagonal in the reference basis; off-diagonals become exactly 0.
HermitianOperator dephase(const HermitianOperator &a);
DensityMatrix dephase(const DensityMatrix &rho);

bool is_incoherent(const DensityMatrix &rho, double tol);

/// Sum of off-diagonal moduli.
double c_l1(const DensityMatrix &rho);
/// Sum of squared off-diagonal moduli.
double c_l2(const DensityMatrix &rho);

struct RobustnessOptions {
    double tol = 1e-6;  ///< target primal-dual gap
    int max_iter = 500; ///< cutting-plane rounds
    double psd_tol = kPsdTol;
};

struct RobustnessResult {
    double value = 0.0;                   ///< certified-feasible upper value
    std::vector<double> optimal_diagonal; ///< sigma*, sum = 1 + value
    HermitianOperator dual_witness;       ///< -Tr(rho W) = dual_bound
    double dual_bound = 0.0;
    double gap = 0.0;
    int iterations = 0;
    std::size_t cuts = 0;
    bool converged = false;
};

/// Thrown by robustness() when the round cap is hit; carries the best
/// feasible point found so far.
class MaxIterationsExceeded : public Error {
  public:
    MaxIterationsExceeded(const std::string &what, RobustnessResult best)
        : Error(ErrorCode::MaxIterationsExceeded, what), best_(std::move(best)) {}
    [[nodiscard]] const RobustnessResult &best() const noexcept { return best_; }

  private:
    RobustnessResult best_;
};

/**
 * Robustness of coherence,
 *
 *     C_R(rho) = min { Tr sigma - 1 : sigma diagonal, sigma >= 0, sigma - rho PSD },
 *
 * solved by a cutting-plane method. Each round solves the covering LP
 * min sum_i x_i s.t. sum_i |v_i|^2 x_i >= <v|rho|v> over the current cut set
 * (through its packing dual, by simplex), then adds the negative eigenvectors
 * of diag(x) - rho as new cuts. The LP dual multipliers give the witness
 * W = 1 - sum_c mu_c |v_c><v_c|, whose value -Tr(rho W) is a lower bound;
 * shifting x by the most negative eigenvalue gives a feasible upper bound.
 */
RobustnessResult robustness(const DensityMatrix &rho, const RobustnessOptions &opts = {});

} // namespace cohkit
