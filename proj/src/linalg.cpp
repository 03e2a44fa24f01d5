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

#include "cohkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cohkit {

const char *to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotDensity: return "NotDensity";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::WitnessExceedsIdentity: return "WitnessExceedsIdentity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::IntervalTooWide: return "IntervalTooWide";
    case ErrorCode::NoSamples: return "NoSamples";
    case ErrorCode::Unbounded: return "Unbounded";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim_ * dim_) {
        throw Error(ErrorCode::NonSquare, "buffer length is not dim*dim");
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    const std::size_t d = rows.size();
    Matrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (rows[j].size() != d) {
            throw Error(ErrorCode::NonSquare, "row " + std::to_string(j) +
                                                  " has length " +
                                                  std::to_string(rows[j].size()) +
                                                  ", expected " + std::to_string(d));
        }
        for (std::size_t k = 0; k < d; ++k) m(j, k) = rows[j][k];
    }
    return m;
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(j, k) = std::conj((*this)(k, j));
    return m;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

static void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    "dimension mismatch: " + std::to_string(a) + " vs " +
                        std::to_string(b));
    }
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    require_same_dim(a.dim_, b.dim_);
    Matrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    require_same_dim(a.dim_, b.dim_);
    Matrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    require_same_dim(a.dim_, b.dim_);
    const std::size_t d = a.dim_;
    Matrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
            const Complex ajl = a(j, l);
            if (ajl == Complex{}) continue;
            for (std::size_t k = 0; k < d; ++k) m(j, k) += ajl * b(l, k);
        }
    }
    return m;
}

Matrix operator*(Complex s, const Matrix &a) {
    Matrix m(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = s * a.data_[i];
    return m;
}

// ----------------------------------------------------- HermitianOperator

HermitianOperator HermitianOperator::make(const Matrix &raw, double tol) {
    if (!raw.all_finite()) {
        throw Error(ErrorCode::NonFinite, "matrix contains NaN or Inf");
    }
    const std::size_t d = raw.dim();
    double worst = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j; k < d; ++k)
            worst = std::max(worst, std::abs(raw(j, k) - std::conj(raw(k, j))));
    if (worst > tol) {
        std::ostringstream os;
        os << "matrix deviates from Hermitian by " << worst << " (tolerance " << tol
           << ")";
        throw Error(ErrorCode::NotHermitian, os.str());
    }
    Matrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        m(j, j) = raw(j, j).real();
        for (std::size_t k = j + 1; k < d; ++k) {
            const Complex z = 0.5 * (raw(j, k) + std::conj(raw(k, j)));
            m(j, k) = z;
            m(k, j) = std::conj(z);
        }
    }
    return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    return HermitianOperator(Matrix::identity(dim));
}

HermitianOperator HermitianOperator::zeros(std::size_t dim) {
    return HermitianOperator(Matrix(dim));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i])) {
            throw Error(ErrorCode::NonFinite, "diagonal entry is not finite");
        }
        m(i, i) = entries[i];
    }
    return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::outer(std::span<const Complex> v) {
    const std::size_t d = v.size();
    Matrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        m(j, j) = std::norm(v[j]);
        for (std::size_t k = j + 1; k < d; ++k) {
            const Complex z = v[j] * std::conj(v[k]);
            m(j, k) = z;
            m(k, j) = std::conj(z);
        }
    }
    return HermitianOperator(std::move(m));
}

HermitianOperator operator+(const HermitianOperator &a, const HermitianOperator &b) {
    return HermitianOperator(a.m_ + b.m_);
}

HermitianOperator operator-(const HermitianOperator &a, const HermitianOperator &b) {
    return HermitianOperator(a.m_ - b.m_);
}

HermitianOperator operator*(double s, const HermitianOperator &a) {
    return HermitianOperator(Complex(s) * a.m_);
}

HermitianBuilder &HermitianBuilder::set(std::size_t j, std::size_t k, Complex z) {
    if (j == k) {
        m_(j, j) = z.real();
    } else {
        m_(j, k) = z;
        m_(k, j) = std::conj(z);
    }
    return *this;
}

HermitianOperator HermitianBuilder::build() const {
    if (!m_.all_finite()) {
        throw Error(ErrorCode::NonFinite, "matrix contains NaN or Inf");
    }
    return HermitianOperator(m_);
}

// -------------------------------------------------------------- PureState

PureState PureState::make(std::vector<Complex> amplitudes, double tol) {
    if (amplitudes.empty()) {
        throw Error(ErrorCode::InvalidArgument, "pure state needs dimension >= 1");
    }
    double n2 = 0.0;
    for (const auto &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NonFinite, "amplitude is not finite");
        }
        n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > tol) {
        std::ostringstream os;
        os << "squared norm " << n2 << " differs from 1 by more than " << tol;
        throw Error(ErrorCode::NotNormalized, os.str());
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double n2 = 0.0;
    for (const auto &a : amplitudes) n2 += std::norm(a);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw Error(ErrorCode::NotNormalized, "cannot normalize a zero vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes) a *= inv;
    return make(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    std::vector<Complex> a(dim);
    a[index] = 1.0;
    return PureState(std::move(a));
}

double PureState::max_modulus() const {
    double m = 0.0;
    for (const auto &a : amps_) m = std::max(m, std::abs(a));
    return m;
}

DensityMatrix PureState::projector() const {
    return DensityMatrix(HermitianOperator::outer(amps_));
}

// ---------------------------------------------------------- DensityMatrix

DensityMatrix DensityMatrix::make(HermitianOperator op, double trace_tol,
                                  double psd_tol) {
    if (op.dim() == 0) {
        throw Error(ErrorCode::InvalidArgument, "density matrix needs dimension >= 1");
    }
    const double tr = op.trace();
    if (std::abs(tr - 1.0) > trace_tol) {
        std::ostringstream os;
        os << "trace " << tr << " differs from 1 by more than " << trace_tol;
        throw Error(ErrorCode::NotDensity, os.str());
    }
    const double lmin = min_eigenvalue(op).value;
    if (lmin < -psd_tol) {
        std::ostringstream os;
        os << "minimum eigenvalue " << lmin << " is below -" << psd_tol;
        throw Error(ErrorCode::NotDensity, os.str());
    }
    return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorCode::InvalidArgument, "density matrix needs dimension >= 1");
    }
    return DensityMatrix((1.0 / static_cast<double>(dim)) *
                         HermitianOperator::identity(dim));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
    for (double p : populations) {
        if (p < 0.0) throw Error(ErrorCode::NotDensity, "negative population");
    }
    return make(HermitianOperator::diagonal(populations));
}

DensityMatrix DensityMatrix::mix(double w, const DensityMatrix &a,
                                 const DensityMatrix &b) {
    if (!(w >= 0.0 && w <= 1.0)) {
        throw Error(ErrorCode::RangeError, "mixing weight must lie in [0, 1]");
    }
    require_same_dim(a.dim(), b.dim());
    return DensityMatrix(w * a.op_ + (1.0 - w) * b.op_);
}

DensityMatrix DensityMatrix::conjugate_by_phases(std::span<const double> angles) const {
    require_same_dim(angles.size(), dim());
    HermitianBuilder b(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        b.set(j, j, op_(j, j));
        for (std::size_t k = j + 1; k < dim(); ++k)
            b.set(j, k, op_(j, k) * std::polar(1.0, -(angles[j] - angles[k])));
    }
    return DensityMatrix(b.build());
}

// ------------------------------------------------------------ eigensolver

std::vector<Complex> EigenDecomposition::column(std::size_t k) const {
    const std::size_t d = vectors.dim();
    std::vector<Complex> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = vectors(i, k);
    return v;
}

namespace {

double off_diagonal_norm(const Matrix &a) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = j + 1; k < a.dim(); ++k) s += 2.0 * std::norm(a(j, k));
    return std::sqrt(s);
}

} // namespace

EigenDecomposition eigh(const HermitianOperator &op) {
    const std::size_t d = op.dim();
    Matrix a = op.matrix();
    Matrix v = Matrix::identity(d);
    const double scale = a.frobenius_norm();
    const double target = 1e-12 * scale;

    int sweep = 0;
    double off = off_diagonal_norm(a);
    while (off > target) {
        if (sweep == kMaxJacobiSweeps) {
            std::ostringstream os;
            os << "Jacobi eigensolver did not converge in " << kMaxJacobiSweeps
               << " sweeps (off-diagonal residual " << off << ")";
            throw Error(ErrorCode::ConvergenceFailure, os.str());
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0 || r < 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Below roundoff of both diagonal entries the rotation is a no-op.
                if (sweep > 3 && std::abs(app) + 1e3 * r == std::abs(app) &&
                    std::abs(aqq) + 1e3 * r == std::abs(aqq)) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const Complex e = std::conj(apq) / r; // e^{-i arg apq}
                const Complex ec = std::conj(e);
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t i = 0; i < d; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = c * aip - s * e * aiq;
                    a(i, q) = s * aip + c * e * aiq;
                }
                for (std::size_t j = 0; j < d; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = c * apj - s * ec * aqj;
                    a(q, j) = s * apj + c * ec * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;
                for (std::size_t i = 0; i < d; ++i) {
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = c * vip - s * e * viq;
                    v(i, q) = s * vip + c * e * viq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    EigenDecomposition out;
    out.values.resize(d);
    out.vectors = Matrix(d);
    out.sweeps = sweep;
    for (std::size_t k = 0; k < d; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < d; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

MinEigen min_eigenvalue(const HermitianOperator &a) {
    if (a.dim() == 0) {
        throw Error(ErrorCode::InvalidArgument, "empty matrix has no eigenvalues");
    }
    auto ed = eigh(a);
    return MinEigen{ed.values.front(), ed.column(0)};
}

double trace_product(const HermitianOperator &a, const HermitianOperator &b) {
    require_same_dim(a.dim(), b.dim());
    const std::size_t d = a.dim();
    double re = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            const Complex x = a(j, k);
            const Complex y = b(k, j);
            re += x.real() * y.real() - x.imag() * y.imag();
        }
    return re;
}

double expectation(const HermitianOperator &w, const DensityMatrix &rho) {
    return trace_product(rho.op(), w);
}

bool is_psd(const HermitianOperator &a, double tol) {
    return min_eigenvalue(a).value >= -tol;
}

Complex sandwich(std::span<const Complex> u, const HermitianOperator &a,
                 std::span<const Complex> v) {
    require_same_dim(u.size(), a.dim());
    require_same_dim(v.size(), a.dim());
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Complex row = 0.0;
        for (std::size_t k = 0; k < a.dim(); ++k) row += a(j, k) * v[k];
        s += std::conj(u[j]) * row;
    }
    return s;
}

} // namespace cohkit
