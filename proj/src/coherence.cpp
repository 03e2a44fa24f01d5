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

#include "cohkit/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "simplex.hpp"

namespace cohkit {

HermitianOperator dephase(const HermitianOperator &a) {
    std::vector<double> diag(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) diag[i] = a(i, i).real();
    return HermitianOperator::diagonal(diag);
}

DensityMatrix dephase(const DensityMatrix &rho) {
    std::vector<double> diag(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) diag[i] = std::max(0.0, rho(i, i).real());
    return DensityMatrix::diagonal(diag);
}

bool is_incoherent(const DensityMatrix &rho, double tol) {
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = j + 1; k < rho.dim(); ++k)
            if (std::abs(rho(j, k)) > tol) return false;
    return true;
}

double c_l1(const DensityMatrix &rho) {
    double s = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = j + 1; k < rho.dim(); ++k) s += std::abs(rho(j, k));
    return 2.0 * s;
}

double c_l2(const DensityMatrix &rho) {
    double s = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = j + 1; k < rho.dim(); ++k) s += std::norm(rho(j, k));
    return 2.0 * s;
}

namespace {

struct Cut {
    std::vector<double> weights; // |v_i|^2
    double gain = 0.0;           // <v|rho|v>
    std::vector<Complex> v;
};

Cut make_cut(const DensityMatrix &rho, std::vector<Complex> v) {
    Cut c;
    c.weights.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c.weights[i] = std::norm(v[i]);
    c.gain = std::max(0.0, sandwich(v, rho.op(), v).real());
    c.v = std::move(v);
    return c;
}

HermitianOperator witness_from_multipliers(const std::vector<Cut> &cuts,
                                           const std::vector<double> &mu,
                                           std::size_t d) {
    HermitianOperator m = HermitianOperator::zeros(d);
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        if (mu[c] <= 0.0) continue;
        m = m + mu[c] * HermitianOperator::outer(cuts[c].v);
    }
    double worst = 1.0;
    for (std::size_t i = 0; i < d; ++i) worst = std::max(worst, m(i, i).real());
    return HermitianOperator::identity(d) - (1.0 / worst) * m;
}

} // namespace

RobustnessResult robustness(const DensityMatrix &rho, const RobustnessOptions &opts) {
    if (!(opts.tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "robustness tolerance must be > 0");
    }
    if (opts.max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 1");
    }
    const std::size_t d = rho.dim();
    std::vector<Cut> cuts;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Complex> e(d);
        e[i] = 1.0;
        cuts.push_back(make_cut(rho, std::move(e)));
    }
    const std::vector<double> unit(d, 1.0);

    RobustnessResult best;
    best.value = std::numeric_limits<double>::infinity();
    best.dual_bound = -std::numeric_limits<double>::infinity();

    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        std::vector<std::vector<double>> columns;
        std::vector<double> gains;
        columns.reserve(cuts.size());
        for (const auto &c : cuts) {
            columns.push_back(c.weights);
            gains.push_back(c.gain);
        }
        const auto lp = detail::solve_packing_lp(columns, gains, unit);

        const auto w = witness_from_multipliers(cuts, lp.primal, d);
        const double lower = -expectation(w, rho);
        if (lower > best.dual_bound) {
            best.dual_bound = lower;
            best.dual_witness = w;
        }

        const auto slack = HermitianOperator::diagonal(lp.dual) - rho.op();
        const auto ed = eigh(slack);
        const double shift = std::max(0.0, -ed.values.front());
        const double upper =
            std::accumulate(lp.dual.begin(), lp.dual.end(), 0.0) +
            static_cast<double>(d) * shift - 1.0;
        if (upper < best.value) {
            best.value = upper;
            best.optimal_diagonal = lp.dual;
            for (auto &x : best.optimal_diagonal) x += shift;
        }
        best.iterations = iter;
        best.gap = std::max(0.0, best.value - best.dual_bound);
        if (best.gap <= opts.tol) {
            best.converged = true;
            break;
        }

        const double floor = std::min(-1e-15, 1e-6 * ed.values.front());
        for (std::size_t k = 0; k < d && ed.values[k] < floor; ++k) {
            cuts.push_back(make_cut(rho, ed.column(k)));
        }
    }
    best.cuts = cuts.size();
    if (!best.converged) {
        std::ostringstream os;
        os << "robustness solver stopped after " << best.iterations
           << " rounds with gap " << best.gap;
        throw MaxIterationsExceeded(os.str(), best);
    }
    return best;
}

} // namespace cohkit
