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

#include "cohkit/cohkit.h"

#include <cmath>
#include <cstdlib>
#include <new>
#include <string>
#include <vector>

#include "cohkit/coherence.hpp"
#include "cohkit/experiments.hpp"
#include "cohkit/io.hpp"
#include "cohkit/linalg.hpp"
#include "cohkit/metrology.hpp"
#include "cohkit/witness.hpp"

using namespace cohkit;

struct cohkit_text {
    std::string s;
};

struct cohkit_matrix {
    io::MatrixKind kind = io::MatrixKind::Hermitian;
    HermitianOperator op; // density and hermitian kinds
    DensityMatrix rho;    // density kind, and the projector of a pure state
    PureState psi;        // pure kind
};

struct cohkit_robustness {
    RobustnessResult r;
};

struct cohkit_table {
    std::vector<ExperimentRecord> records;
    std::vector<BoundRow> rows;
};

struct cohkit_hamiltonian {
    Hamiltonian h;
};

namespace {

thread_local std::string g_last_error;

cohkit_status from_code(ErrorCode c) { return static_cast<cohkit_status>(static_cast<int>(c) + 1); }

cohkit_status fail(cohkit_status s, const char *what) {
    g_last_error = what;
    return s;
}

template <class F>
cohkit_status guarded(F &&f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const Error &e) {
        return fail(from_code(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(COHKIT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(COHKIT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(COHKIT_ERR_INTERNAL, "unknown exception");
    }
}

void require(bool ok, const char *what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

cohkit_matrix *wrap(const HermitianOperator &op) {
    auto *m = new cohkit_matrix;
    m->kind = io::MatrixKind::Hermitian;
    m->op = op;
    return m;
}

cohkit_matrix *wrap(const DensityMatrix &rho) {
    auto *m = new cohkit_matrix;
    m->kind = io::MatrixKind::Density;
    m->op = rho.op();
    m->rho = rho;
    return m;
}

cohkit_matrix *wrap(const PureState &psi) {
    auto *m = new cohkit_matrix;
    m->kind = io::MatrixKind::Pure;
    m->psi = psi;
    m->rho = psi.projector();
    m->op = m->rho.op();
    return m;
}

cohkit_matrix *wrap(const io::MatrixFile &f, double trace_tol, double psd_tol) {
    switch (f.kind) {
    case io::MatrixKind::Density: return wrap(f.to_density(trace_tol, psd_tol));
    case io::MatrixKind::Hermitian: return wrap(f.to_hermitian());
    case io::MatrixKind::Pure: return wrap(f.to_pure(trace_tol));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown matrix kind");
}

const DensityMatrix &state_of(const cohkit_matrix *m) {
    require(m != nullptr, "null matrix");
    if (m->kind == io::MatrixKind::Hermitian)
        throw Error(ErrorCode::NotDensity, "expected a density matrix or pure state");
    return m->rho;
}

const HermitianOperator &operator_of(const cohkit_matrix *m) {
    require(m != nullptr, "null matrix");
    return m->op;
}

const PureState &pure_of(const cohkit_matrix *m) {
    require(m != nullptr, "null matrix");
    if (m->kind != io::MatrixKind::Pure)
        throw Error(ErrorCode::InvalidArgument, "expected a pure state");
    return m->psi;
}

PhaseMatrix phases_from(std::size_t dim, const double *theta, std::size_t n) {
    require(dim >= 1, "dimension must be positive");
    require(n == PhaseMatrix::pair_count(dim), "phase count must be d(d-1)/2");
    require(n == 0 || theta != nullptr, "null phase array");
    return PhaseMatrix(dim, std::vector<double>(theta, theta + n));
}

void copy_phases(const PhaseMatrix &p, double *theta, std::size_t n) {
    if (n != p.upper().size())
        throw Error(ErrorCode::DimensionMismatch, "phase buffer must hold d(d-1)/2 entries");
    for (std::size_t i = 0; i < n; ++i) theta[i] = p.upper()[i];
}

cohkit_text *text(std::string s) { return new cohkit_text{std::move(s)}; }

} // namespace

extern "C" {

const char *cohkit_version(void) { return "1.0.0"; }

const char *cohkit_status_name(cohkit_status status) {
    switch (status) {
    case COHKIT_OK: return "OK";
    case COHKIT_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case COHKIT_ERR_INTERNAL: return "Internal";
    default: break;
    }
    const int c = static_cast<int>(status) - 1;
    if (c >= 0 && c <= static_cast<int>(ErrorCode::Unbounded))
        return to_string(static_cast<ErrorCode>(c));
    return "Unknown";
}

const char *cohkit_last_error(void) { return g_last_error.c_str(); }

const char *cohkit_text_data(const cohkit_text *t) { return t ? t->s.c_str() : ""; }
size_t cohkit_text_size(const cohkit_text *t) { return t ? t->s.size() : 0; }
void cohkit_text_free(cohkit_text *t) { delete t; }

cohkit_status cohkit_matrix_create(cohkit_kind kind, size_t dim, const double *re_im,
                                   double hermitian_tol, double trace_tol, double psd_tol,
                                   cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr && re_im != nullptr, "null argument");
        require(dim >= 1, "dimension must be positive");
        const std::size_t n = kind == COHKIT_KIND_PURE ? dim : dim * dim;
        std::vector<Complex> z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = {re_im[2 * i], re_im[2 * i + 1]};
        switch (kind) {
        case COHKIT_KIND_PURE: *out = wrap(PureState::make(std::move(z), trace_tol)); break;
        case COHKIT_KIND_HERMITIAN:
            *out = wrap(HermitianOperator::make(Matrix(dim, std::move(z)), hermitian_tol));
            break;
        case COHKIT_KIND_DENSITY:
            *out = wrap(DensityMatrix::make(
                HermitianOperator::make(Matrix(dim, std::move(z)), hermitian_tol), trace_tol,
                psd_tol));
            break;
        default: throw Error(ErrorCode::InvalidArgument, "unknown matrix kind");
        }
        return COHKIT_OK;
    });
}

cohkit_status cohkit_matrix_load(const char *path, double trace_tol, double psd_tol,
                                 cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr && path != nullptr, "null argument");
        *out = wrap(io::read_matrix_file(path, trace_tol, psd_tol), trace_tol, psd_tol);
        return COHKIT_OK;
    });
}

cohkit_status cohkit_matrix_save(const cohkit_matrix *m, const char *path) {
    return guarded([&] {
        require(m != nullptr && path != nullptr, "null argument");
        io::MatrixFile f;
        switch (m->kind) {
        case io::MatrixKind::Density: f = io::MatrixFile::from(m->rho); break;
        case io::MatrixKind::Hermitian: f = io::MatrixFile::from(m->op); break;
        case io::MatrixKind::Pure: f = io::MatrixFile::from(m->psi); break;
        }
        io::write_matrix_file(path, f);
        return COHKIT_OK;
    });
}

void cohkit_matrix_free(cohkit_matrix *m) { delete m; }

cohkit_kind cohkit_matrix_kind(const cohkit_matrix *m) {
    switch (m->kind) {
    case io::MatrixKind::Density: return COHKIT_KIND_DENSITY;
    case io::MatrixKind::Pure: return COHKIT_KIND_PURE;
    default: return COHKIT_KIND_HERMITIAN;
    }
}

size_t cohkit_matrix_dim(const cohkit_matrix *m) { return m ? m->op.dim() : 0; }

cohkit_status cohkit_matrix_entries(const cohkit_matrix *m, double *re_im, size_t len) {
    return guarded([&] {
        require(m != nullptr && re_im != nullptr, "null argument");
        std::vector<Complex> z;
        if (m->kind == io::MatrixKind::Pure) {
            auto a = m->psi.amplitudes();
            z.assign(a.begin(), a.end());
        } else {
            auto d = m->op.matrix().data();
            z.assign(d.begin(), d.end());
        }
        if (len < 2 * z.size()) return fail(COHKIT_ERR_BUFFER_TOO_SMALL, "buffer too small");
        for (std::size_t i = 0; i < z.size(); ++i) {
            re_im[2 * i] = z[i].real();
            re_im[2 * i + 1] = z[i].imag();
        }
        return COHKIT_OK;
    });
}

cohkit_status cohkit_matrix_min_eigenvalue(const cohkit_matrix *m, double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = min_eigenvalue(operator_of(m)).value;
        return COHKIT_OK;
    });
}

cohkit_status cohkit_state_ghz(int photons, cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(ghz_state(photons));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_state_maximally_coherent(size_t dim, cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(maximally_coherent(dim));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_state_qutrit_family(double p, double varphi, double phi1, double phi2,
                                         cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(qutrit_family_state(p, varphi, phi1, phi2));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_c_l1(const cohkit_matrix *rho, double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = c_l1(state_of(rho));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_c_l2(const cohkit_matrix *rho, double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = c_l2(state_of(rho));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_is_incoherent(const cohkit_matrix *rho, double tol, int *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = is_incoherent(state_of(rho), tol) ? 1 : 0;
        return COHKIT_OK;
    });
}

cohkit_status cohkit_robustness_solve(const cohkit_matrix *rho, double tol, int max_iter,
                                      cohkit_robustness **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        RobustnessOptions opts;
        opts.tol = tol;
        opts.max_iter = max_iter;
        try {
            *out = new cohkit_robustness{robustness(state_of(rho), opts)};
        } catch (const MaxIterationsExceeded &e) {
            *out = new cohkit_robustness{e.best()};
            return fail(COHKIT_ERR_MAX_ITERATIONS, e.what());
        }
        return COHKIT_OK;
    });
}

double cohkit_robustness_value(const cohkit_robustness *r) { return r->r.value; }
double cohkit_robustness_dual_bound(const cohkit_robustness *r) { return r->r.dual_bound; }
double cohkit_robustness_gap(const cohkit_robustness *r) { return r->r.gap; }
int cohkit_robustness_iterations(const cohkit_robustness *r) { return r->r.iterations; }
size_t cohkit_robustness_cuts(const cohkit_robustness *r) { return r->r.cuts; }
int cohkit_robustness_converged(const cohkit_robustness *r) { return r->r.converged ? 1 : 0; }

cohkit_status cohkit_robustness_diagonal(const cohkit_robustness *r, double *out, size_t len) {
    return guarded([&] {
        require(r != nullptr && out != nullptr, "null argument");
        const auto &x = r->r.optimal_diagonal;
        if (len < x.size()) return fail(COHKIT_ERR_BUFFER_TOO_SMALL, "buffer too small");
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
        return COHKIT_OK;
    });
}

cohkit_status cohkit_robustness_dual_witness(const cohkit_robustness *r, cohkit_matrix **out) {
    return guarded([&] {
        require(r != nullptr && out != nullptr, "null argument");
        *out = wrap(r->r.dual_witness);
        return COHKIT_OK;
    });
}

void cohkit_robustness_free(cohkit_robustness *r) { delete r; }

cohkit_status cohkit_witness_from_operator(const cohkit_matrix *a, cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(construct_witness(operator_of(a)));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_witness_w1(const cohkit_matrix *sigma, cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(w1(state_of(sigma)));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_witness_w2(size_t dim, const double *theta, size_t n, cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(w2(phases_from(dim, theta, n)));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_witness_w2_optimal(const cohkit_matrix *rho, double *theta, size_t n) {
    return guarded([&] {
        require(n == 0 || theta != nullptr, "null argument");
        copy_phases(w2_optimal(state_of(rho)), theta, n);
        return COHKIT_OK;
    });
}

cohkit_status cohkit_witness_w3(const cohkit_matrix *phi, cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(w3(pure_of(phi)));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_witness_w4(size_t dim, const double *theta, size_t n, cohkit_matrix **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const PhaseMatrix p = phases_from(dim, theta, n);
        *out = wrap(w4(GellMannCoefficients(dim, p.upper())));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_witness_w4_optimal(const cohkit_matrix *rho, double *theta, size_t n) {
    return guarded([&] {
        require(n == 0 || theta != nullptr, "null argument");
        copy_phases(w4_optimal(state_of(rho)).angles(), theta, n);
        return COHKIT_OK;
    });
}

cohkit_status cohkit_phases_load(const char *path, size_t *dim, double *theta, size_t n,
                                 size_t *count) {
    return guarded([&] {
        require(path != nullptr && dim != nullptr && count != nullptr, "null argument");
        const PhaseMatrix p = io::read_phase_file(path);
        *dim = p.dim();
        *count = p.upper().size();
        if (theta == nullptr) return COHKIT_OK;
        if (n < p.upper().size()) return fail(COHKIT_ERR_BUFFER_TOO_SMALL, "buffer too small");
        for (std::size_t i = 0; i < p.upper().size(); ++i) theta[i] = p.upper()[i];
        return COHKIT_OK;
    });
}

cohkit_status cohkit_expectation(const cohkit_matrix *w, const cohkit_matrix *rho, double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto &op = operator_of(w);
        const auto &r = state_of(rho);
        if (op.dim() != r.dim()) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
        *out = expectation(op, r);
        return COHKIT_OK;
    });
}

cohkit_status cohkit_validate_witness(const cohkit_matrix *w, double tol, int *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = validate_witness(operator_of(w), tol) ? 1 : 0;
        return COHKIT_OK;
    });
}

cohkit_status cohkit_witness_below_identity(const cohkit_matrix *w, double tol, int *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto &op = operator_of(w);
        *out = is_psd(HermitianOperator::identity(op.dim()) - op, tol) ? 1 : 0;
        return COHKIT_OK;
    });
}

cohkit_status cohkit_bound_robustness(const cohkit_matrix *w, const cohkit_matrix *rho,
                                      double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = bound_robustness(operator_of(w), state_of(rho));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_bound_l1(const cohkit_matrix *rho, const double *theta, size_t n,
                              double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto &r = state_of(rho);
        *out = bound_l1(r, phases_from(r.dim(), theta, n));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_fidelity_bound(const cohkit_matrix *rho, const cohkit_matrix *phi,
                                    double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = fidelity_bound(state_of(rho), pure_of(phi));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_compare_w1_w3(const cohkit_matrix *phi, cohkit_matrix **difference,
                                   int *is_psd_out) {
    return guarded([&] {
        require(is_psd_out != nullptr, "null argument");
        const auto c = compare_w1_w3(pure_of(phi));
        *is_psd_out = c.is_psd ? 1 : 0;
        if (difference != nullptr) *difference = wrap(c.difference);
        return COHKIT_OK;
    });
}

static cohkit_table *make_table(std::vector<ExperimentRecord> records) {
    auto *t = new cohkit_table;
    t->rows = reproduce_table1(records);
    t->records = std::move(records);
    return t;
}

cohkit_status cohkit_table_load(const char *csv_path, cohkit_table **out) {
    return guarded([&] {
        require(csv_path != nullptr && out != nullptr, "null argument");
        *out = make_table(io::read_records_csv(csv_path));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_table_parse(const char *csv_text, cohkit_table **out) {
    return guarded([&] {
        require(csv_text != nullptr && out != nullptr, "null argument");
        *out = make_table(io::parse_records_csv(csv_text));
        return COHKIT_OK;
    });
}

size_t cohkit_table_size(const cohkit_table *t) { return t ? t->rows.size() : 0; }

cohkit_status cohkit_table_row(const cohkit_table *t, size_t i, cohkit_bound_row *out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        if (i >= t->rows.size()) throw Error(ErrorCode::RangeError, "row index out of range");
        const auto &r = t->rows[i];
        *out = {t->records[i].photons, r.bound_w3.value, r.bound_w3.err, r.bound_w1.value,
                r.bound_w1.err};
        return COHKIT_OK;
    });
}

const char *cohkit_table_label(const cohkit_table *t, size_t i) {
    if (t == nullptr || i >= t->rows.size()) return nullptr;
    return t->rows[i].label.c_str();
}

cohkit_status cohkit_table_render(const cohkit_table *t, cohkit_text **out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        *out = text(render_table1(t->records, t->rows));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_table_csv(const cohkit_table *t, cohkit_text **out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        *out = text(io::table1_csv(t->rows));
        return COHKIT_OK;
    });
}

void cohkit_table_free(cohkit_table *t) { delete t; }

cohkit_status cohkit_ghz_crosscheck(int photons, double mixing, cohkit_ghz_report *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto g = ghz_dense_crosscheck(photons, mixing);
        *out = {g.photons,     g.mixing,      g.fidelity,    g.population,
                g.dense_w3,    g.dense_w1,    g.analytic_w3, g.analytic_w1,
                g.dephased_projector_error, g.max_deviation};
        return COHKIT_OK;
    });
}

cohkit_status cohkit_fig1_csv(const cohkit_fig1_config *cfg, cohkit_text **out) {
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "null argument");
        require(cfg->points >= 1, "points must be positive");
        require(cfg->samples >= 0, "samples must be non-negative");
        require(std::isfinite(cfg->varphi_min) && std::isfinite(cfg->varphi_max),
                "grid bounds must be finite");
        Fig1Config c;
        c.p = cfg->p;
        c.phi1 = cfg->phi1;
        c.phi2 = cfg->phi2;
        c.samples = cfg->samples;
        c.seed = cfg->seed;
        const int n = cfg->points;
        for (int i = 0; i < n; ++i)
            c.grid.push_back(n == 1 ? cfg->varphi_min
                                    : cfg->varphi_min + (cfg->varphi_max - cfg->varphi_min) *
                                                            i / (n - 1));
        *out = text(io::fig1_csv(fig1_series(c)));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_hamiltonian_create(const double *energies, size_t n,
                                        cohkit_hamiltonian **out) {
    return guarded([&] {
        require(out != nullptr && (n == 0 || energies != nullptr), "null argument");
        *out = new cohkit_hamiltonian{Hamiltonian(std::vector<double>(energies, energies + n))};
        return COHKIT_OK;
    });
}

void cohkit_hamiltonian_free(cohkit_hamiltonian *h) { delete h; }

cohkit_status cohkit_signal(const cohkit_hamiltonian *h, double phi, double *model,
                            double *matrix) {
    return guarded([&] {
        require(h != nullptr, "null argument");
        if (model) *model = expected_signal(h->h, phi);
        if (matrix) *matrix = matrix_signal(h->h, phi);
        return COHKIT_OK;
    });
}

cohkit_status cohkit_sweep_csv(const cohkit_hamiltonian *h, double lo, double hi, int points,
                               cohkit_text **out) {
    return guarded([&] {
        require(h != nullptr && out != nullptr, "null argument");
        require(points >= 1, "points must be positive");
        std::vector<double> grid;
        for (int i = 0; i < points; ++i)
            grid.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1));
        *out = text(io::sweep_csv(h->h, grid));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_simulate_samples(const cohkit_hamiltonian *h, double phi_true,
                                      const double *probes, size_t n, double noise_sigma,
                                      uint64_t seed, cohkit_signal_sample *out) {
    return guarded([&] {
        require(h != nullptr && (n == 0 || (probes != nullptr && out != nullptr)),
                "null argument");
        const auto s = simulate_samples(h->h, phi_true, std::span<const double>(probes, n),
                                        noise_sigma, seed);
        for (std::size_t i = 0; i < s.size(); ++i)
            out[i] = {s[i].probe, s[i].measured, s[i].noise_sigma};
        return COHKIT_OK;
    });
}

static std::vector<SignalSample> to_samples(const cohkit_signal_sample *s, size_t n) {
    std::vector<SignalSample> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = {s[i].probe, s[i].measured, s[i].noise_sigma};
    return v;
}

cohkit_status cohkit_samples_csv(const cohkit_signal_sample *samples, size_t n,
                                 cohkit_text **out) {
    return guarded([&] {
        require(out != nullptr && (n == 0 || samples != nullptr), "null argument");
        *out = text(io::samples_csv(to_samples(samples, n)));
        return COHKIT_OK;
    });
}

cohkit_status cohkit_samples_load(const char *path, cohkit_signal_sample *out, size_t cap,
                                  size_t *count) {
    return guarded([&] {
        require(path != nullptr && count != nullptr, "null argument");
        const auto s = io::parse_samples_csv(io::read_text(path));
        *count = s.size();
        if (out == nullptr) return COHKIT_OK;
        if (cap < s.size()) return fail(COHKIT_ERR_BUFFER_TOO_SMALL, "buffer too small");
        for (std::size_t i = 0; i < s.size(); ++i)
            out[i] = {s[i].probe, s[i].measured, s[i].noise_sigma};
        return COHKIT_OK;
    });
}

cohkit_status cohkit_estimate_phase(const cohkit_hamiltonian *h,
                                    const cohkit_signal_sample *samples, size_t n, double lo,
                                    double hi, double *phi_hat, double *rms_residual) {
    return guarded([&] {
        require(h != nullptr && phi_hat != nullptr && (n == 0 || samples != nullptr),
                "null argument");
        const auto v = to_samples(samples, n);
        const auto e = estimate_phase(v, h->h, lo, hi);
        *phi_hat = e.phi_hat;
        if (rms_residual) *rms_residual = e.rms_residual;
        return COHKIT_OK;
    });
}

cohkit_status cohkit_resolve_seed(int has_cli, uint64_t cli, uint64_t *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = io::resolve_seed(has_cli ? std::optional<std::uint64_t>(cli) : std::nullopt,
                                std::getenv("COHKIT_SEED"));
        return COHKIT_OK;
    });
}

} // extern "C"
