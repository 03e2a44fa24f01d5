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

#include "simplex.hpp"

#include <limits>

#include "cohkit/error.hpp"

namespace cohkit::detail {

namespace {
constexpr double kPivotEps = 1e-12;
constexpr double kCostEps = 1e-13;
} // namespace

LpSolution solve_packing_lp(std::span<const std::vector<double>> columns,
                            std::span<const double> gains,
                            std::span<const double> bounds) {
    const std::size_t m = bounds.size();
    const std::size_t n = columns.size();
    if (gains.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "one gain per column required");
    }
    for (double b : bounds) {
        if (b < 0.0) throw Error(ErrorCode::InvalidArgument, "bounds must be >= 0");
    }

    // Tableau rows 0..m-1 are constraints, row m is the objective row holding
    // reduced costs. Columns 0..n-1 structural, n..n+m-1 slack, n+m rhs.
    const std::size_t width = n + m + 1;
    std::vector<double> t((m + 1) * width, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double & { return t[r * width + c]; };

    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].size() != m) {
            throw Error(ErrorCode::DimensionMismatch, "column length != row count");
        }
        for (std::size_t i = 0; i < m; ++i) at(i, j) = columns[j][i];
        at(m, j) = -gains[j];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        at(i, n + i) = 1.0;
        at(i, width - 1) = bounds[i];
        basis[i] = n + i;
    }

    LpSolution out;
    for (;;) {
        // Bland: lowest-index column with negative reduced cost enters.
        std::size_t enter = width;
        for (std::size_t c = 0; c + 1 < width; ++c) {
            if (at(m, c) < -kCostEps) {
                enter = c;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double a = at(i, enter);
            if (a <= kPivotEps) continue;
            const double ratio = at(i, width - 1) / a;
            // Ties go to the basic variable with the smallest index.
            if (leave == m || ratio < best - 1e-15) {
                best = ratio;
                leave = i;
            } else if (ratio <= best + 1e-15 && basis[i] < basis[leave]) {
                best = std::min(best, ratio);
                leave = i;
            }
        }
        if (leave == m) {
            throw Error(ErrorCode::Unbounded, "linear program is unbounded");
        }

        const double piv = at(leave, enter);
        for (std::size_t c = 0; c < width; ++c) at(leave, c) /= piv;
        at(leave, enter) = 1.0;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave) continue;
            const double f = at(r, enter);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
            at(r, enter) = 0.0;
        }
        basis[leave] = enter;
        ++out.pivots;
    }

    out.primal.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) out.primal[basis[i]] = at(i, width - 1);
    }
    out.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.dual[i] = std::max(0.0, at(m, n + i));
    out.objective = at(m, width - 1);
    return out;
}

} // namespace cohkit::detail
