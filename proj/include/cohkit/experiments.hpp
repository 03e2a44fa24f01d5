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

#include <cstdint>
#include <string>
#include <vector>

#include "cohkit/linalg.hpp"

namespace cohkit {

/// Published GHZ fidelity / population measurement.
struct ExperimentRecord {
    std::string label;
    int photons = 0;
    double fidelity = 0.0;
    double fidelity_err = 0.0;
    double population = 0.0;
    double population_err = 0.0;
    /// Decimal places the inputs were quoted with; used only for rendering.
    int decimals = 3;
};

/// Throws RangeError unless fidelity and population lie in [0, 1], errors are
/// non-negative and the photon count is positive.
void validate_record(const ExperimentRecord &rec);

struct Estimate {
    double value = 0.0;
    double err = 0.0;
};

struct BoundRow {
    std::string label;
    Estimate bound_w3;
    Estimate bound_w1;
    int decimals = 3;
};

/// F - 1/2 with error dF.
Estimate ghz_bound_w3(const ExperimentRecord &rec);
/// F - P/2 with error dF + dP/2 (linear propagation).
Estimate ghz_bound_w1(const ExperimentRecord &rec);

/// One row per record; throws EmptyInput for an empty list.
std::vector<BoundRow> reproduce_table1(const std::vector<ExperimentRecord> &records);

/// "0.305(24)": value rounded to `decimals` places with exact ties going
/// down, uncertainty in units of the last place with ties going up.
std::string format_with_uncertainty(double value, double err, int decimals);

/// Human-readable table: one column per record, rows F, <P>, -Tr(rho W3),
/// -Tr(rho W1).
std::string render_table1(const std::vector<ExperimentRecord> &records,
                          const std::vector<BoundRow> &rows);

/// (|0...0> + |1...1>) / sqrt(2).
PureState ghz_state(int photons);

inline constexpr int kMaxDenseGhzPhotons = 8;

struct GhzCrosscheck {
    int photons = 0;
    double mixing = 0.0;      ///< q in q|GHZ><GHZ| + (1-q) 1/2^N
    double fidelity = 0.0;    ///< <GHZ|rho|GHZ>
    double population = 0.0;  ///< Tr(rho P^N)
    double dense_w3 = 0.0;    ///< -Tr(rho W3)
    double dense_w1 = 0.0;    ///< -Tr(rho W1)
    double analytic_w3 = 0.0; ///< F - 1/2
    double analytic_w1 = 0.0; ///< F - P/2
    double dephased_projector_error = 0.0; ///< max |Delta(GHZ) - P^N/2|
    double max_deviation = 0.0;
};

/// Dense check of the closed-form GHZ bounds; 2 <= photons <= 8, otherwise
/// DimensionTooLarge (or RangeError below 2).
GhzCrosscheck ghz_dense_crosscheck(int photons, double mixing);

// --- qutrit family used for the l1 bound illustration --------------------

/// p |Phi><Phi| + (1-p) 1/3 with
/// |Phi> = cos(v)/sqrt2 |1> + cos(v) e^{i phi1}/sqrt2 |2> + sin(v) e^{i phi2} |3>.
DensityMatrix qutrit_family_state(double p, double varphi, double phi1, double phi2);
/// Closed form p (cos^2 v + 2 sqrt2 |cos v sin v|).
double qutrit_family_c_l1(double p, double varphi);

struct Fig1Config {
    double p = 0.1;
    double phi1 = 0.2;
    double phi2 = 0.3;
    std::vector<double> grid; ///< varphi values
    int samples = 100;
    std::uint64_t seed = 0;
};

struct Fig1Point {
    double varphi = 0.0;
    double c_l1 = 0.0;          ///< closed form
    double optimal_bound = 0.0; ///< -Tr(rho W2) at the saturating phases
    std::vector<double> sampled; ///< -Tr(rho W2) at uniformly random phases
};

/// Sampled l1 bounds along a varphi grid. Each grid point draws from its own
/// generator seeded from (seed, index), so results do not depend on order.
std::vector<Fig1Point> fig1_series(const Fig1Config &cfg);

} // namespace cohkit
