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

#include "cohkit/witness.hpp"

#include <cmath>
#include <numbers>

#include "cohkit/coherence.hpp"

namespace cohkit {

PhaseMatrix::PhaseMatrix(std::size_t dim, std::vector<double> upper)
    : dim_(dim), theta_(std::move(upper)) {
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (theta_.size() != pair_count(dim)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(pair_count(dim)) + " angles for d = " +
                        std::to_string(dim) + ", got " + std::to_string(theta_.size()));
    }
    for (double t : theta_) {
        if (!std::isfinite(t)) throw Error(ErrorCode::NonFinite, "angle is not finite");
    }
}

std::size_t PhaseMatrix::index(std::size_t j, std::size_t k) const {
    if (!(j < k && k < dim_)) {
        throw Error(ErrorCode::InvalidArgument, "phase index must satisfy j < k < d");
    }
    // Entries before row j: sum_{r<j} (d - 1 - r).
    return j * (2 * dim_ - j - 1) / 2 + (k - j - 1);
}

PhaseMatrix PhaseMatrix::negated() const {
    auto t = theta_;
    for (auto &x : t) x = -x;
    return PhaseMatrix(dim_, std::move(t));
}

static double wrap_angle(double t) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(t, two_pi);
    if (w < 0.0) w += two_pi;
    if (w >= two_pi) w = 0.0;
    return w;
}

GellMannCoefficients::GellMannCoefficients(std::size_t dim, std::vector<double> upper) {
    for (auto &t : upper) {
        if (!std::isfinite(t)) throw Error(ErrorCode::NonFinite, "angle is not finite");
        t = wrap_angle(t);
    }
    angles_ = PhaseMatrix(dim, std::move(upper));
}

HermitianOperator construct_witness(const HermitianOperator &a) {
    HermitianBuilder b(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = j + 1; k < a.dim(); ++k) b.set(j, k, -a(j, k));
    return b.build();
}

bool validate_witness(const HermitianOperator &w, double tol) {
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (w(i, i).real() < -tol) return false;
    return true;
}

HermitianOperator w1(const DensityMatrix &sigma) { return construct_witness(sigma.op()); }

HermitianOperator w2(const PhaseMatrix &phases) {
    HermitianBuilder b(phases.dim());
    for (std::size_t j = 0; j < phases.dim(); ++j)
        for (std::size_t k = j + 1; k < phases.dim(); ++k)
            b.set(j, k, std::polar(1.0, phases(j, k)));
    return b.build();
}

PhaseMatrix w2_optimal(const DensityMatrix &rho) {
    PhaseMatrix p(rho.dim());
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = j + 1; k < rho.dim(); ++k) {
            const Complex z = rho(j, k);
            p.set(j, k, z == Complex{} ? 0.0 : std::arg(z) + std::numbers::pi);
        }
    return p;
}

HermitianOperator w3(const PureState &phi) {
    const double lmax = phi.max_modulus();
    return (lmax * lmax) * HermitianOperator::identity(phi.dim()) -
           HermitianOperator::outer(phi.amplitudes());
}

HermitianOperator w4(const GellMannCoefficients &coeffs) {
    // cos(t) (|j><k| + |k><j|) + sin(t) (-i|j><k| + i|k><j|): entry (j,k) = e^{-it}.
    HermitianBuilder b(coeffs.dim());
    for (std::size_t j = 0; j < coeffs.dim(); ++j)
        for (std::size_t k = j + 1; k < coeffs.dim(); ++k) {
            const double t = coeffs(j, k);
            b.set(j, k, Complex(std::cos(t), -std::sin(t)));
        }
    return b.build();
}

GellMannCoefficients w4_optimal(const DensityMatrix &rho) {
    return GellMannCoefficients(rho.dim(), w2_optimal(rho).negated().upper());
}

double bound_robustness(const HermitianOperator &w, const DensityMatrix &rho, double tol) {
    if (w.dim() != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "witness and state dimensions differ");
    }
    if (!validate_witness(w, tol)) {
        throw Error(ErrorCode::NotAWitness, "dephased operator is not PSD");
    }
    if (!is_psd(HermitianOperator::identity(w.dim()) - w, tol)) {
        throw Error(ErrorCode::WitnessExceedsIdentity, "1 - W is not PSD");
    }
    return -expectation(w, rho);
}

double bound_l1(const DensityMatrix &rho, const PhaseMatrix &phases) {
    if (phases.dim() != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "phase and state dimensions differ");
    }
    // -Tr(rho W2) = -2 sum_{j<k} Re(rho_jk e^{-i theta_jk})
    double s = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = j + 1; k < rho.dim(); ++k)
            s += (rho(j, k) * std::polar(1.0, -phases(j, k))).real();
    return -2.0 * s;
}

double fidelity_bound(const DensityMatrix &rho, const PureState &phi) {
    if (phi.dim() != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state dimensions differ");
    }
    const double fidelity = sandwich(phi.amplitudes(), rho.op(), phi.amplitudes()).real();
    double dephased = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) dephased += rho(i, i).real() * std::norm(phi[i]);
    return fidelity - dephased;
}

W1W3Comparison compare_w1_w3(const PureState &phi) {
    auto diff = w3(phi) - w1(phi.projector());
    W1W3Comparison out{diff, is_psd(diff)};
    return out;
}

WitnessReport evaluate_witness(const HermitianOperator &w, const DensityMatrix &rho,
                               BoundKind kind, double detection_tol) {
    WitnessReport r;
    r.witness = w;
    r.expectation = expectation(w, rho);
    r.detected = r.expectation < -detection_tol;
    r.bound_kind = kind;
    switch (kind) {
    case BoundKind::Robustness: r.bound_value = bound_robustness(w, rho); break;
    case BoundKind::L1:
        // Only zero-diagonal witnesses with unit-modulus off-diagonals qualify.
        for (std::size_t j = 0; j < w.dim(); ++j) {
            if (w(j, j) != Complex{}) {
                throw Error(ErrorCode::NotAWitness, "l1 bound needs a zero-diagonal witness");
            }
            for (std::size_t k = j + 1; k < w.dim(); ++k)
                if (std::abs(std::abs(w(j, k)) - 1.0) > 1e-12) {
                    throw Error(ErrorCode::NotAWitness,
                                "l1 bound needs unit-modulus off-diagonals");
                }
        }
        r.bound_value = -r.expectation;
        break;
    case BoundKind::None: r.bound_value = 0.0; break;
    }
    return r;
}

} // namespace cohkit
