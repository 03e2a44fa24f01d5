/*
 * Copyright 2026 The cohkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * cohkit C API.
 *
 * Every fallible call returns a cohkit_status; on failure the message of the
 * most recent error on the calling thread is available through
 * cohkit_last_error(). Objects are opaque handles created by *_create / *_load
 * style calls and released with the matching *_free. Handles are immutable
 * after creation and may be shared between threads.
 *
 * Complex buffers are interleaved (re, im) doubles, row-major for matrices.
 */
#ifndef COHKIT_H
#define COHKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COHKIT_BUILDING_LIBRARY)
#define COHKIT_API __declspec(dllexport)
#else
#define COHKIT_API __declspec(dllimport)
#endif
#else
#define COHKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cohkit_status {
    COHKIT_OK = 0,
    COHKIT_ERR_INVALID_ARGUMENT = 1,
    COHKIT_ERR_NON_SQUARE = 2,
    COHKIT_ERR_NOT_HERMITIAN = 3,
    COHKIT_ERR_NON_FINITE = 4,
    COHKIT_ERR_NOT_DENSITY = 5,
    COHKIT_ERR_NOT_NORMALIZED = 6,
    COHKIT_ERR_DIMENSION_MISMATCH = 7,
    COHKIT_ERR_CONVERGENCE = 8,
    COHKIT_ERR_MAX_ITERATIONS = 9,
    COHKIT_ERR_NOT_A_WITNESS = 10,
    COHKIT_ERR_WITNESS_EXCEEDS_IDENTITY = 11,
    COHKIT_ERR_PARSE = 12,
    COHKIT_ERR_IO = 13,
    COHKIT_ERR_EMPTY_INPUT = 14,
    COHKIT_ERR_RANGE = 15,
    COHKIT_ERR_DIMENSION_TOO_LARGE = 16,
    COHKIT_ERR_DEGENERATE_SPECTRUM = 17,
    COHKIT_ERR_INTERVAL_TOO_WIDE = 18,
    COHKIT_ERR_NO_SAMPLES = 19,
    COHKIT_ERR_UNBOUNDED = 20,
    COHKIT_ERR_BUFFER_TOO_SMALL = 21,
    COHKIT_ERR_INTERNAL = 99
} cohkit_status;

typedef enum cohkit_kind {
    COHKIT_KIND_DENSITY = 0,
    COHKIT_KIND_HERMITIAN = 1,
    COHKIT_KIND_PURE = 2
} cohkit_kind;

COHKIT_API const char *cohkit_version(void);
COHKIT_API const char *cohkit_status_name(cohkit_status status);
/* Message of the last failure on this thread ("" if none). */
COHKIT_API const char *cohkit_last_error(void);

/* ---------------------------------------------------------------- text */

/* Owned NUL-terminated string produced by the library. */
typedef struct cohkit_text cohkit_text;

COHKIT_API const char *cohkit_text_data(const cohkit_text *text);
COHKIT_API size_t cohkit_text_size(const cohkit_text *text);
COHKIT_API void cohkit_text_free(cohkit_text *text);

/* ------------------------------------------------------------ matrices */

typedef struct cohkit_matrix cohkit_matrix;

/* `re_im` holds 2*dim*dim doubles for matrix kinds and 2*dim for pure
 * states. Density input is validated with the given tolerances; hermitian
 * input is symmetrized within `hermitian_tol`. */
COHKIT_API cohkit_status cohkit_matrix_create(cohkit_kind kind, size_t dim,
                                              const double *re_im, double hermitian_tol,
                                              double trace_tol, double psd_tol,
                                              cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_matrix_load(const char *path, double trace_tol,
                                            double psd_tol, cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_matrix_save(const cohkit_matrix *m, const char *path);
COHKIT_API void cohkit_matrix_free(cohkit_matrix *m);

COHKIT_API cohkit_kind cohkit_matrix_kind(const cohkit_matrix *m);
COHKIT_API size_t cohkit_matrix_dim(const cohkit_matrix *m);
/* Copies 2*dim*dim (or 2*dim for pure states) doubles into `re_im`. */
COHKIT_API cohkit_status cohkit_matrix_entries(const cohkit_matrix *m, double *re_im,
                                               size_t len);
COHKIT_API cohkit_status cohkit_matrix_min_eigenvalue(const cohkit_matrix *m, double *out);

COHKIT_API cohkit_status cohkit_state_ghz(int photons, cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_state_maximally_coherent(size_t dim, cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_state_qutrit_family(double p, double varphi, double phi1,
                                                    double phi2, cohkit_matrix **out);

/* ------------------------------------------------------------ measures */

/* State arguments accept density matrices and pure states. */
COHKIT_API cohkit_status cohkit_c_l1(const cohkit_matrix *rho, double *out);
COHKIT_API cohkit_status cohkit_c_l2(const cohkit_matrix *rho, double *out);
COHKIT_API cohkit_status cohkit_is_incoherent(const cohkit_matrix *rho, double tol,
                                              int *out);

typedef struct cohkit_robustness cohkit_robustness;

/* Solves the robustness program to primal-dual gap `tol`. On
 * COHKIT_ERR_MAX_ITERATIONS `*out` still receives the best feasible point. */
COHKIT_API cohkit_status cohkit_robustness_solve(const cohkit_matrix *rho, double tol,
                                                 int max_iter, cohkit_robustness **out);
COHKIT_API double cohkit_robustness_value(const cohkit_robustness *r);
COHKIT_API double cohkit_robustness_dual_bound(const cohkit_robustness *r);
COHKIT_API double cohkit_robustness_gap(const cohkit_robustness *r);
COHKIT_API int cohkit_robustness_iterations(const cohkit_robustness *r);
COHKIT_API size_t cohkit_robustness_cuts(const cohkit_robustness *r);
COHKIT_API int cohkit_robustness_converged(const cohkit_robustness *r);
COHKIT_API cohkit_status cohkit_robustness_diagonal(const cohkit_robustness *r, double *out,
                                                    size_t len);
COHKIT_API cohkit_status cohkit_robustness_dual_witness(const cohkit_robustness *r,
                                                        cohkit_matrix **out);
COHKIT_API void cohkit_robustness_free(cohkit_robustness *r);

/* ------------------------------------------------------------ witnesses */

/* Phase arrays list theta_jk over j < k row by row: d(d-1)/2 entries. */
COHKIT_API cohkit_status cohkit_witness_from_operator(const cohkit_matrix *a, cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_witness_w1(const cohkit_matrix *sigma, cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_witness_w2(size_t dim, const double *theta, size_t n,
                                           cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_witness_w2_optimal(const cohkit_matrix *rho, double *theta,
                                                   size_t n);
COHKIT_API cohkit_status cohkit_witness_w3(const cohkit_matrix *phi, cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_witness_w4(size_t dim, const double *theta, size_t n,
                                           cohkit_matrix **out);
COHKIT_API cohkit_status cohkit_witness_w4_optimal(const cohkit_matrix *rho, double *theta,
                                                   size_t n);
COHKIT_API cohkit_status cohkit_phases_load(const char *path, size_t *dim, double *theta,
                                            size_t n, size_t *count);

/* Re Tr(rho W). */
COHKIT_API cohkit_status cohkit_expectation(const cohkit_matrix *w, const cohkit_matrix *rho,
                                            double *out);
COHKIT_API cohkit_status cohkit_validate_witness(const cohkit_matrix *w, double tol, int *out);
/* 1 if 1 - W is PSD within tol. */
COHKIT_API cohkit_status cohkit_witness_below_identity(const cohkit_matrix *w, double tol,
                                                       int *out);
COHKIT_API cohkit_status cohkit_bound_robustness(const cohkit_matrix *w,
                                                 const cohkit_matrix *rho, double *out);
COHKIT_API cohkit_status cohkit_bound_l1(const cohkit_matrix *rho, const double *theta,
                                         size_t n, double *out);
COHKIT_API cohkit_status cohkit_fidelity_bound(const cohkit_matrix *rho,
                                               const cohkit_matrix *phi, double *out);
COHKIT_API cohkit_status cohkit_compare_w1_w3(const cohkit_matrix *phi,
                                              cohkit_matrix **difference, int *is_psd);

/* ---------------------------------------------------------- experiments */

typedef struct cohkit_table cohkit_table;

typedef struct cohkit_bound_row {
    int photons;
    double bound_w3;
    double bound_w3_err;
    double bound_w1;
    double bound_w1_err;
} cohkit_bound_row;

COHKIT_API cohkit_status cohkit_table_load(const char *csv_path, cohkit_table **out);
COHKIT_API cohkit_status cohkit_table_parse(const char *csv_text, cohkit_table **out);
COHKIT_API size_t cohkit_table_size(const cohkit_table *t);
COHKIT_API cohkit_status cohkit_table_row(const cohkit_table *t, size_t i,
                                          cohkit_bound_row *out);
COHKIT_API const char *cohkit_table_label(const cohkit_table *t, size_t i);
COHKIT_API cohkit_status cohkit_table_render(const cohkit_table *t, cohkit_text **out);
COHKIT_API cohkit_status cohkit_table_csv(const cohkit_table *t, cohkit_text **out);
COHKIT_API void cohkit_table_free(cohkit_table *t);

typedef struct cohkit_ghz_report {
    int photons;
    double mixing;
    double fidelity;
    double population;
    double dense_w3;
    double dense_w1;
    double analytic_w3;
    double analytic_w1;
    double dephased_projector_error;
    double max_deviation;
} cohkit_ghz_report;

COHKIT_API cohkit_status cohkit_ghz_crosscheck(int photons, double mixing,
                                               cohkit_ghz_report *out);

typedef struct cohkit_fig1_config {
    double p;
    double phi1;
    double phi2;
    double varphi_min;
    double varphi_max;
    int points;  /* grid size; 1 evaluates varphi_min only */
    int samples; /* random phase matrices per grid point */
    uint64_t seed;
} cohkit_fig1_config;

COHKIT_API cohkit_status cohkit_fig1_csv(const cohkit_fig1_config *cfg, cohkit_text **out);

/* ------------------------------------------------------------ metrology */

typedef struct cohkit_hamiltonian cohkit_hamiltonian;

typedef struct cohkit_signal_sample {
    double probe;
    double measured;
    double noise_sigma;
} cohkit_signal_sample;

COHKIT_API cohkit_status cohkit_hamiltonian_create(const double *energies, size_t n,
                                                   cohkit_hamiltonian **out);
COHKIT_API void cohkit_hamiltonian_free(cohkit_hamiltonian *h);
COHKIT_API cohkit_status cohkit_signal(const cohkit_hamiltonian *h, double phi,
                                       double *model, double *matrix);
COHKIT_API cohkit_status cohkit_sweep_csv(const cohkit_hamiltonian *h, double lo, double hi,
                                          int points, cohkit_text **out);
COHKIT_API cohkit_status cohkit_simulate_samples(const cohkit_hamiltonian *h, double phi_true,
                                                 const double *probes, size_t n,
                                                 double noise_sigma, uint64_t seed,
                                                 cohkit_signal_sample *out);
COHKIT_API cohkit_status cohkit_samples_csv(const cohkit_signal_sample *samples, size_t n,
                                            cohkit_text **out);
/* Loads a probe,measured,noise_sigma CSV; call with out == NULL to query the
 * count. */
COHKIT_API cohkit_status cohkit_samples_load(const char *path, cohkit_signal_sample *out,
                                             size_t cap, size_t *count);
COHKIT_API cohkit_status cohkit_estimate_phase(const cohkit_hamiltonian *h,
                                               const cohkit_signal_sample *samples, size_t n,
                                               double lo, double hi, double *phi_hat,
                                               double *rms_residual);

/* ------------------------------------------------------------ misc */

/* --seed beats COHKIT_SEED; has_cli = 0 means no --seed was given. */
COHKIT_API cohkit_status cohkit_resolve_seed(int has_cli, uint64_t cli, uint64_t *out);

#ifdef __cplusplus
}
#endif

#endif /* COHKIT_H */
