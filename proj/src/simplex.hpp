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

#include <cstddef>
#include <span>
#include <vector>

namespace cohkit::detail {

struct LpSolution {
    std::vector<double> primal; ///< one entry per column
    std::vector<double> dual;   ///< one entry per row (shadow prices)
    double objective = 0.0;
    int pivots = 0;
};

/// Dense tableau primal simplex with Bland's rule for
///
///     maximize  c.u   subject to  A u <= b,  u >= 0,   with b >= 0,
///
/// so the all-slack basis is feasible from the start. `columns[j]` holds the
/// j-th column of A (length `rows`). The returned dual solves the covering
/// problem  minimize b.y  subject to  A^T y >= c,  y >= 0.
/// Throws Error(Unbounded) if the objective is unbounded.
LpSolution solve_packing_lp(std::span<const std::vector<double>> columns,
                            std::span<const double> gains,
                            std::span<const double> bounds);

} // namespace cohkit::detail
