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
 * @file io.hpp
 * On-disk formats.
 *
 * Matrix files are JSON objects
 *
 *     {"kind": "density" | "hermitian" | "pure", "dim": d,
 *      "entries": [[re, im], ...]}
 *
 * with d*d row-major pairs for matrices and d pairs for pure states. Numbers
 * are written in shortest round-trip form, so write-then-read is bit-exact.
 *
 * Phase / angle files are {"dim": d, "theta": [t01, t02, ..., t12, ...]}
 * listing the strict upper triangle row by row.
 *
 * Experiment records are CSV with the header
 * label,N,fidelity,fidelity_err,population,population_err.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohkit/experiments.hpp"
#include "cohkit/linalg.hpp"
#include "cohkit/metrology.hpp"
#include "cohkit/witness.hpp"

namespace cohkit::io {

enum class MatrixKind { Density, Hermitian, Pure };

const char *to_string(MatrixKind kind) noexcept;

struct MatrixFile {
    MatrixKind kind = MatrixKind::Hermitian;
    std::size_t dim = 0;
    std::vector<Complex> entries;

    static MatrixFile from(const DensityMatrix &rho);
    static MatrixFile from(const HermitianOperator &op);
    static MatrixFile from(const PureState &phi);

    /// Density and hermitian files both convert to an operator.
    [[nodiscard]] HermitianOperator to_hermitian(double tol = kHermitianTol) const;
    [[nodiscard]] DensityMatrix to_density(double trace_tol = kTraceTol,
                                           double psd_tol = kPsdTol) const;
    [[nodiscard]] PureState to_pure(double tol = kTraceTol) const;

    friend bool operator==(const MatrixFile &, const MatrixFile &) = default;
};

/// Throws ParseError on malformed text, NotHermitian when a matrix file is
/// not Hermitian, and NotDensity when a density file fails validation.
MatrixFile parse_matrix(std::string_view text, double trace_tol = kTraceTol,
                        double psd_tol = kPsdTol);
std::string dump_matrix(const MatrixFile &file);

MatrixFile read_matrix_file(const std::string &path, double trace_tol = kTraceTol,
                            double psd_tol = kPsdTol);
void write_matrix_file(const std::string &path, const MatrixFile &file);

PhaseMatrix parse_phases(std::string_view text);
std::string dump_phases(const PhaseMatrix &p);
PhaseMatrix read_phase_file(const std::string &path);

/// Display precision of each record comes from the decimals used for the
/// fidelity and population fields (3 when they carry no decimals).
std::vector<ExperimentRecord> parse_records_csv(std::string_view text);
std::vector<ExperimentRecord> read_records_csv(const std::string &path);

std::string table1_csv(const std::vector<BoundRow> &rows);
/// Without samples: varphi,c_l1,optimal_bound. With samples, one row per draw:
/// varphi,c_l1,optimal_bound,sample,bound,negative.
std::string fig1_csv(const std::vector<Fig1Point> &points);
std::string sweep_csv(const Hamiltonian &h, const std::vector<double> &grid);

std::vector<SignalSample> parse_samples_csv(std::string_view text);
std::string samples_csv(const std::vector<SignalSample> &samples);

std::string read_text(const std::string &path);
void write_text(const std::string &path, std::string_view text);

/// 17 significant digits, '.' decimal separator.
std::string format_double(double x);

struct RunConfig {
    double trace_tol = kTraceTol;
    double psd_tol = kPsdTol;
    double sdp_tol = 1e-6;
    double detection_tol = kDetectionTol;
    int sdp_max_iter = 500;
    std::uint64_t seed = 0;
    std::string output;

    /// Throws InvalidArgument unless all tolerances are positive.
    void validate() const;
};

/// --seed wins over the COHKIT_SEED environment variable; 0 otherwise.
std::uint64_t resolve_seed(std::optional<std::uint64_t> cli, const char *env_value);

} // namespace cohkit::io
