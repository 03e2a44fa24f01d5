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
 * @file linalg.hpp
 * Dense complex matrices and the Hermitian / density-matrix / pure-state value
 * types the rest of the library is written against.
 *
 * All matrices are stored row-major in a single contiguous buffer. Values are
 * immutable once constructed; every operation returns a fresh object.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cohkit/error.hpp"

namespace cohkit {

using Complex = std::complex<double>;

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kHermitianTol = 1e-9;

/// Square dense complex matrix.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(std::size_t dim, std::vector<Complex> row_major);

    /// Throws NonSquare if any row length differs from the row count.
    static Matrix from_rows(const std::vector<std::vector<Complex>> &rows);
    static Matrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex operator()(std::size_t j, std::size_t k) const {
        return data_[j * dim_ + k];
    }
    Complex &operator()(std::size_t j, std::size_t k) {
        return data_[j * dim_ + k];
    }
    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return data_;
    }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double frobenius_norm() const;
    [[nodiscard]] bool all_finite() const;

    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator*(Complex s, const Matrix &a);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Complex Hermitian matrix, stored exactly symmetrized.
class HermitianOperator {
  public:
    HermitianOperator() = default;

    /// Returns (raw + raw^dagger) / 2 after checking the deviation from
    /// Hermiticity is at most `tol` entrywise.
    static HermitianOperator make(const Matrix &raw, double tol = kHermitianTol);
    static HermitianOperator identity(std::size_t dim);
    static HermitianOperator zeros(std::size_t dim);
    static HermitianOperator diagonal(std::span<const double> entries);
    /// Projector |v><v| (no normalization applied).
    static HermitianOperator outer(std::span<const Complex> v);

    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] Complex operator()(std::size_t j, std::size_t k) const {
        return m_(j, k);
    }
    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] double trace() const { return m_.trace().real(); }
    [[nodiscard]] double frobenius_norm() const { return m_.frobenius_norm(); }

    friend HermitianOperator operator+(const HermitianOperator &a,
                                       const HermitianOperator &b);
    friend HermitianOperator operator-(const HermitianOperator &a,
                                       const HermitianOperator &b);
    friend HermitianOperator operator*(double s, const HermitianOperator &a);
    friend bool operator==(const HermitianOperator &a,
                           const HermitianOperator &b) = default;

  private:
    explicit HermitianOperator(Matrix m) : m_(std::move(m)) {}
    friend class HermitianBuilder;
    Matrix m_;
};

/// Fills a Hermitian operator entry by entry; set(j, k, z) also writes the
/// conjugate into (k, j), and diagonal entries keep only their real part.
class HermitianBuilder {
  public:
    explicit HermitianBuilder(std::size_t dim) : m_(dim) {}
    HermitianBuilder &set(std::size_t j, std::size_t k, Complex z);
    [[nodiscard]] HermitianOperator build() const;

  private:
    Matrix m_;
};

class DensityMatrix;

/// Normalized state vector in the reference basis.
class PureState {
  public:
    PureState() = default;
    static PureState make(std::vector<Complex> amplitudes,
                          double tol = kTraceTol);
    /// Rescales to unit norm; throws NotNormalized for the zero vector.
    static PureState normalized(std::vector<Complex> amplitudes);
    static PureState basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] double max_modulus() const;
    [[nodiscard]] DensityMatrix projector() const;

  private:
    explicit PureState(std::vector<Complex> a) : amps_(std::move(a)) {}
    std::vector<Complex> amps_;
};

/// Unit-trace positive-semidefinite Hermitian operator.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    static DensityMatrix make(HermitianOperator op, double trace_tol = kTraceTol,
                              double psd_tol = kPsdTol);
    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix diagonal(std::span<const double> populations);

    [[nodiscard]] std::size_t dim() const noexcept { return op_.dim(); }
    [[nodiscard]] const HermitianOperator &op() const noexcept { return op_; }
    [[nodiscard]] Complex operator()(std::size_t j, std::size_t k) const {
        return op_(j, k);
    }

    /// D rho D^dagger with D = diag(exp(-i angles_j)); entries pick up
    /// exp(-i (angles_j - angles_k)).
    [[nodiscard]] DensityMatrix conjugate_by_phases(std::span<const double> angles) const;

    /// Convex combination w * a + (1 - w) * b, w in [0, 1].
    static DensityMatrix mix(double w, const DensityMatrix &a,
                             const DensityMatrix &b);

  private:
    explicit DensityMatrix(HermitianOperator op) : op_(std::move(op)) {}
    friend class PureState;
    HermitianOperator op_;
};

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    Matrix vectors;             ///< column k is the eigenvector of values[k]
    int sweeps = 0;

    [[nodiscard]] std::vector<Complex> column(std::size_t k) const;
};

/// Cyclic complex Jacobi eigensolver. Throws ConvergenceFailure after
/// kMaxJacobiSweeps sweeps.
EigenDecomposition eigh(const HermitianOperator &a);
inline constexpr int kMaxJacobiSweeps = 100;

struct MinEigen {
    double value = 0.0;
    std::vector<Complex> vector;
};

MinEigen min_eigenvalue(const HermitianOperator &a);

/// Re Tr(rho W).
double expectation(const HermitianOperator &w, const DensityMatrix &rho);
/// Re Tr(A B) for generic Hermitian pairs.
double trace_product(const HermitianOperator &a, const HermitianOperator &b);

bool is_psd(const HermitianOperator &a, double tol = kPsdTol);

/// <u|A|v>
Complex sandwich(std::span<const Complex> u, const HermitianOperator &a,
                 std::span<const Complex> v);

} // namespace cohkit
