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

// cohkit command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 success, 2 validation/parse error, 3 solver non-convergence,
// 4 argument error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohkit/cohkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;
constexpr int kExitArgument = 4;

int exit_code(cohkit_status s) {
    switch (s) {
    case COHKIT_OK: return kExitOk;
    case COHKIT_ERR_CONVERGENCE:
    case COHKIT_ERR_MAX_ITERATIONS:
    case COHKIT_ERR_UNBOUNDED: return kExitSolver;
    case COHKIT_ERR_INVALID_ARGUMENT:
    case COHKIT_ERR_RANGE:
    case COHKIT_ERR_DIMENSION_TOO_LARGE:
    case COHKIT_ERR_INTERVAL_TOO_WIDE:
    case COHKIT_ERR_BUFFER_TOO_SMALL: return kExitArgument;
    case COHKIT_ERR_INTERNAL: return 1;
    default: return kExitValidation;
    }
}

// Carries a status out of nested helpers to main().
struct Failure {
    cohkit_status status;
    std::string message;
};

struct ArgumentError {
    std::string message;
};

void check(cohkit_status s) {
    if (s != COHKIT_OK) throw Failure{s, cohkit_last_error()};
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x + 0.0); // no "-0"
    return buf;
}

// RAII wrappers over the opaque handles.
struct MatrixHandle {
    cohkit_matrix *p = nullptr;
    MatrixHandle() = default;
    explicit MatrixHandle(cohkit_matrix *m) : p(m) {}
    MatrixHandle(const MatrixHandle &) = delete;
    MatrixHandle &operator=(const MatrixHandle &) = delete;
    ~MatrixHandle() { cohkit_matrix_free(p); }
};

struct TextHandle {
    cohkit_text *p = nullptr;
    ~TextHandle() { cohkit_text_free(p); }
    [[nodiscard]] std::string str() const { return {cohkit_text_data(p), cohkit_text_size(p)}; }
};

struct HamiltonianHandle {
    cohkit_hamiltonian *p = nullptr;
    ~HamiltonianHandle() { cohkit_hamiltonian_free(p); }
};

struct Tolerances {
    double trace = 1e-9;
    double psd = 1e-9;
    double detection = 1e-10;
};

void load(MatrixHandle &m, const std::string &path, const Tolerances &tol) {
    check(cohkit_matrix_load(path.c_str(), tol.trace, tol.psd, &m.p));
}

void emit(const std::string &text, const std::string &out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Failure{COHKIT_ERR_IO, "cannot write " + out};
    f << text;
    if (!f) throw Failure{COHKIT_ERR_IO, "write failed: " + out};
}

std::string matrix_rows(const cohkit_matrix *m) {
    const size_t d = cohkit_matrix_dim(m);
    std::vector<double> z(2 * d * d);
    check(cohkit_matrix_entries(m, z.data(), z.size()));
    std::string s;
    for (size_t j = 0; j < d; ++j) {
        s += "  [";
        for (size_t k = 0; k < d; ++k) {
            if (k) s += ", ";
            s += "[" + num(z[2 * (j * d + k)]) + ", " + num(z[2 * (j * d + k) + 1]) + "]";
        }
        s += "]\n";
    }
    return s;
}

std::vector<double> read_phases(const std::string &path, size_t dim) {
    size_t file_dim = 0, count = 0;
    check(cohkit_phases_load(path.c_str(), &file_dim, nullptr, 0, &count));
    if (file_dim != dim)
        throw Failure{COHKIT_ERR_DIMENSION_MISMATCH, "phase file dimension differs from state"};
    std::vector<double> theta(count);
    check(cohkit_phases_load(path.c_str(), &file_dim, theta.data(), theta.size(), &count));
    return theta;
}

// ------------------------------------------------------------------ measure

struct MeasureArgs {
    std::string state;
    double tol = 1e-6;
    int max_iter = 500;
    std::string dual_out;
    Tolerances tols;
};

int run_measure(const MeasureArgs &a) {
    MatrixHandle rho;
    load(rho, a.state, a.tols);
    double l1 = 0, l2 = 0;
    check(cohkit_c_l1(rho.p, &l1));
    check(cohkit_c_l2(rho.p, &l2));

    cohkit_robustness *r = nullptr;
    const cohkit_status s = cohkit_robustness_solve(rho.p, a.tol, a.max_iter, &r);
    if (r == nullptr) check(s);
    const std::string msg = cohkit_last_error();

    std::cout << "dim: " << cohkit_matrix_dim(rho.p) << '\n'
              << "c_l1: " << num(l1) << '\n'
              << "c_l2: " << num(l2) << '\n'
              << "c_r: " << num(cohkit_robustness_value(r)) << '\n'
              << "c_r_dual_bound: " << num(cohkit_robustness_dual_bound(r)) << '\n'
              << "sdp_gap: " << num(cohkit_robustness_gap(r)) << '\n'
              << "sdp_iterations: " << cohkit_robustness_iterations(r) << '\n'
              << "sdp_cuts: " << cohkit_robustness_cuts(r) << '\n'
              << "converged: " << (cohkit_robustness_converged(r) ? "yes" : "no") << '\n';

    MatrixHandle w;
    cohkit_status ws = cohkit_robustness_dual_witness(r, &w.p);
    cohkit_robustness_free(r);
    check(ws);
    const std::string dual = a.dual_out.empty() ? a.state + ".dual.json" : a.dual_out;
    check(cohkit_matrix_save(w.p, dual.c_str()));
    std::cout << "dual_witness: " << dual << '\n';

    if (s != COHKIT_OK) throw Failure{s, msg};
    return kExitOk;
}

// ------------------------------------------------------------------ witness

struct WitnessArgs {
    std::string kind;
    std::string state;
    std::string a_file;
    std::string sigma = "self";
    std::string phases_file;
    std::string phi_file;
    std::string angles_file;
    bool optimal = false;
    std::string out;
    Tolerances tols;
};

int run_witness(const WitnessArgs &a) {
    MatrixHandle rho;
    load(rho, a.state, a.tols);
    const size_t d = cohkit_matrix_dim(rho.p);
    const size_t pairs = d * (d - 1) / 2;

    MatrixHandle w;
    enum { None, Robustness, L1 } bound = None;
    std::vector<double> theta; // l1 phases, in the W2 convention
    std::vector<std::string> extra;

    if (a.kind == "theorem1") {
        if (a.a_file.empty()) throw ArgumentError{"theorem1 requires --A <file>"};
        MatrixHandle op;
        load(op, a.a_file, a.tols);
        check(cohkit_witness_from_operator(op.p, &w.p));
    } else if (a.kind == "w1") {
        if (a.sigma == "self") {
            check(cohkit_witness_w1(rho.p, &w.p));
        } else {
            MatrixHandle sigma;
            load(sigma, a.sigma, a.tols);
            check(cohkit_witness_w1(sigma.p, &w.p));
        }
        bound = Robustness;
    } else if (a.kind == "w2" || a.kind == "w4") {
        const bool is_w2 = a.kind == "w2";
        const std::string &file = is_w2 ? a.phases_file : a.angles_file;
        if (a.optimal == !file.empty())
            throw ArgumentError{a.kind + " requires exactly one of " +
                                (is_w2 ? "--phases" : "--angles") + " <file> or --optimal"};
        std::vector<double> angles(pairs);
        if (a.optimal) {
            auto fn = is_w2 ? cohkit_witness_w2_optimal : cohkit_witness_w4_optimal;
            check(fn(rho.p, angles.data(), angles.size()));
        } else {
            angles = read_phases(file, d);
        }
        check((is_w2 ? cohkit_witness_w2 : cohkit_witness_w4)(d, angles.data(), angles.size(),
                                                             &w.p));
        theta = angles;
        if (!is_w2)
            for (double &t : theta) t = -t;
        bound = L1;
    } else if (a.kind == "w3") {
        if (a.phi_file.empty()) throw ArgumentError{"w3 requires --phi <file>"};
        MatrixHandle phi;
        load(phi, a.phi_file, a.tols);
        if (cohkit_matrix_kind(phi.p) != COHKIT_KIND_PURE)
            throw Failure{COHKIT_ERR_INVALID_ARGUMENT, "--phi must be a pure-state file"};
        check(cohkit_witness_w3(phi.p, &w.p));
        double fb = 0;
        check(cohkit_fidelity_bound(rho.p, phi.p, &fb));
        extra.push_back("fidelity_bound: " + num(fb));
        bound = Robustness;
    } else {
        throw ArgumentError{"unknown witness kind: " + a.kind};
    }

    double ev = 0;
    int valid = 0;
    check(cohkit_expectation(w.p, rho.p, &ev));
    check(cohkit_validate_witness(w.p, a.tols.psd, &valid));

    std::cout << "kind: " << a.kind << '\n'
              << "dim: " << d << '\n'
              << "witness_valid: " << (valid ? "yes" : "no") << '\n'
              << "expectation: " << num(ev) << '\n'
              << "verdict: " << (ev < -a.tols.detection ? "coherent" : "inconclusive") << '\n';
    if (bound == Robustness) {
        int below = 0;
        check(cohkit_witness_below_identity(w.p, a.tols.psd, &below));
        if (below) {
            double b = 0;
            check(cohkit_bound_robustness(w.p, rho.p, &b));
            std::cout << "bound: robustness >= " << num(b) << '\n';
        } else {
            std::cout << "bound: none (1 - W is not PSD)\n";
        }
    } else if (bound == L1) {
        double b = 0;
        check(cohkit_bound_l1(rho.p, theta.data(), theta.size(), &b));
        std::cout << "bound: l1 >= " << num(b) << '\n';
    }
    for (const auto &e : extra) std::cout << e << '\n';

    if (a.out.empty()) {
        std::cout << "witness:\n" << matrix_rows(w.p);
    } else {
        check(cohkit_matrix_save(w.p, a.out.c_str()));
        std::cout << "witness: " << a.out << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------------ table1

int run_table1(const std::string &csv, const std::string &out) {
    cohkit_table *t = nullptr;
    check(cohkit_table_load(csv.c_str(), &t));
    TextHandle rendered, machine;
    cohkit_status s = cohkit_table_render(t, &rendered.p);
    if (s == COHKIT_OK) s = cohkit_table_csv(t, &machine.p);
    cohkit_table_free(t);
    check(s);
    std::cout << rendered.str();
    if (!out.empty()) emit(machine.str(), out);
    return kExitOk;
}

// ------------------------------------------------------------------ fig1

struct Fig1Args {
    double p = 0.1, phi1 = 0.2, phi2 = 0.3;
    int points = 50;
    double phi_min = 0.0, phi_max = std::numbers::pi;
    std::optional<double> phi;
    int samples = 100;
    std::optional<uint64_t> seed;
    std::string out;
};

int run_fig1(const Fig1Args &a) {
    cohkit_fig1_config c{};
    c.p = a.p;
    c.phi1 = a.phi1;
    c.phi2 = a.phi2;
    c.varphi_min = a.phi ? *a.phi : a.phi_min;
    c.varphi_max = a.phi ? *a.phi : a.phi_max;
    c.points = a.phi ? 1 : a.points;
    c.samples = a.samples;
    check(cohkit_resolve_seed(a.seed.has_value(), a.seed.value_or(0), &c.seed));
    TextHandle t;
    check(cohkit_fig1_csv(&c, &t.p));
    emit(t.str(), a.out);
    return kExitOk;
}

// ------------------------------------------------------------------ metrology

struct MetrologyArgs {
    std::vector<double> energies;
    int points = 100;
    std::optional<double> lo, hi;
    std::string samples_file;
    std::optional<double> true_phi;
    int n = 20;
    double noise = 0.0;
    std::optional<uint64_t> seed;
    std::string write_samples;
    std::string out;
};

double spread(const std::vector<double> &e) {
    double mn = e.front(), mx = e.front();
    for (double x : e) {
        mn = std::min(mn, x);
        mx = std::max(mx, x);
    }
    return mx - mn;
}

int run_sweep(const MetrologyArgs &a) {
    HamiltonianHandle h;
    check(cohkit_hamiltonian_create(a.energies.data(), a.energies.size(), &h.p));
    const double lo = a.lo.value_or(0.0);
    const double hi = a.hi.value_or(2 * std::numbers::pi / spread(a.energies));
    TextHandle t;
    check(cohkit_sweep_csv(h.p, lo, hi, a.points, &t.p));
    emit(t.str(), a.out);
    return kExitOk;
}

int run_estimate(const MetrologyArgs &a) {
    HamiltonianHandle h;
    check(cohkit_hamiltonian_create(a.energies.data(), a.energies.size(), &h.p));
    const double half = std::numbers::pi / spread(a.energies);

    std::vector<cohkit_signal_sample> samples;
    if (!a.samples_file.empty()) {
        if (a.true_phi) throw ArgumentError{"--samples-file and --true-phi are exclusive"};
        size_t count = 0;
        check(cohkit_samples_load(a.samples_file.c_str(), nullptr, 0, &count));
        samples.resize(count);
        check(cohkit_samples_load(a.samples_file.c_str(), samples.data(), samples.size(),
                                  &count));
    } else {
        if (!a.true_phi) throw ArgumentError{"estimate requires --samples-file or --true-phi"};
        if (a.n < 1) throw ArgumentError{"--n must be positive"};
        uint64_t seed = 0;
        check(cohkit_resolve_seed(a.seed.has_value(), a.seed.value_or(0), &seed));
        // Probe offsets spread over one monotone half-period.
        std::vector<double> probes(static_cast<size_t>(a.n));
        for (int i = 0; i < a.n; ++i) probes[i] = half * i / a.n;
        samples.resize(probes.size());
        check(cohkit_simulate_samples(h.p, *a.true_phi, probes.data(), probes.size(), a.noise,
                                      seed, samples.data()));
        if (!a.write_samples.empty()) {
            TextHandle t;
            check(cohkit_samples_csv(samples.data(), samples.size(), &t.p));
            emit(t.str(), a.write_samples);
        }
    }
    double phi_hat = 0, rms = 0;
    check(cohkit_estimate_phase(h.p, samples.data(), samples.size(), a.lo.value_or(0.0),
                                a.hi.value_or(half), &phi_hat, &rms));
    std::string report = "phi_hat: " + num(phi_hat) + "\nrms_residual: " + num(rms) +
                         "\nsamples: " + std::to_string(samples.size()) + '\n';
    if (a.true_phi) report += "abs_error: " + num(std::abs(phi_hat - *a.true_phi)) + '\n';
    emit(report, a.out);
    return kExitOk;
}

// ------------------------------------------------------------------ validate

int run_validate(const std::string &path, const Tolerances &tol) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        cohkit_table *t = nullptr;
        check(cohkit_table_load(path.c_str(), &t));
        std::cout << "ok: records " << cohkit_table_size(t) << '\n';
        cohkit_table_free(t);
        return kExitOk;
    }
    MatrixHandle m;
    const cohkit_status s = cohkit_matrix_load(path.c_str(), tol.trace, tol.psd, &m.p);
    if (s == COHKIT_ERR_PARSE) {
        const std::string msg = cohkit_last_error();
        size_t dim = 0, count = 0;
        if (cohkit_phases_load(path.c_str(), &dim, nullptr, 0, &count) == COHKIT_OK) {
            std::cout << "ok: phases dim " << dim << '\n';
            return kExitOk;
        }
        throw Failure{s, msg};
    }
    check(s);
    static const char *names[] = {"density", "hermitian", "pure"};
    std::cout << "ok: " << names[cohkit_matrix_kind(m.p)] << " dim " << cohkit_matrix_dim(m.p)
              << '\n';
    return kExitOk;
}

void add_tolerances(CLI::App *cmd, Tolerances &t) {
    cmd->add_option("--trace-tol", t.trace, "Trace tolerance for state validation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--psd-tol", t.psd, "PSD tolerance for state validation")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"cohkit: coherence witnesses, measures and bounds"};
    app.set_version_flag("--version", std::string(cohkit_version()));
    app.require_subcommand(1);

    MeasureArgs measure;
    auto *m = app.add_subcommand("measure", "C_l1, C_l2 and robustness of a state");
    m->add_option("state", measure.state, "State file")->required();
    m->add_option("--tol", measure.tol, "Target primal-dual gap")->check(CLI::PositiveNumber);
    m->add_option("--max-iter", measure.max_iter, "Cutting-plane rounds")
        ->check(CLI::PositiveNumber);
    m->add_option("--dual-out", measure.dual_out, "Dual witness file (default <state>.dual.json)");
    add_tolerances(m, measure.tols);

    WitnessArgs witness;
    auto *w = app.add_subcommand("witness", "Evaluate a witness family on a state");
    w->add_option("kind", witness.kind, "theorem1 | w1 | w2 | w3 | w4")
        ->required()
        ->check(CLI::IsMember({"theorem1", "w1", "w2", "w3", "w4"}));
    w->add_option("state", witness.state, "State file")->required();
    w->add_option("--A", witness.a_file, "Hermitian operator file (theorem1)");
    w->add_option("--sigma", witness.sigma, "self or a density file (w1)");
    w->add_option("--phases", witness.phases_file, "Phase file (w2)");
    w->add_option("--phi", witness.phi_file, "Pure state file (w3)");
    w->add_option("--angles", witness.angles_file, "Angle file (w4)");
    w->add_flag("--optimal", witness.optimal, "Use the state-adapted phases (w2, w4)");
    w->add_option("--out", witness.out, "Write the witness matrix to this file");
    add_tolerances(w, witness.tols);
    w->add_option("--detection-tol", witness.tols.detection, "Detection threshold")
        ->check(CLI::PositiveNumber);

    std::string table_csv, table_out;
    auto *t = app.add_subcommand("table1", "GHZ robustness bounds from fidelity records");
    t->add_option("csv", table_csv, "Record CSV")->required();
    t->add_option("--out", table_out, "Machine-readable CSV output");

    Fig1Args fig;
    auto *f = app.add_subcommand("fig1", "Sampled l1 bounds for the qutrit family (CSV)");
    f->add_option("--p", fig.p, "Mixing weight")->check(CLI::Range(0.0, 1.0));
    f->add_option("--phi1", fig.phi1, "Relative phase 1");
    f->add_option("--phi2", fig.phi2, "Relative phase 2");
    f->add_option("--points", fig.points, "Grid size")->check(CLI::PositiveNumber);
    f->add_option("--phi-min", fig.phi_min, "Grid start");
    f->add_option("--phi-max", fig.phi_max, "Grid end");
    f->add_option("--phi", fig.phi, "Single grid point (overrides the grid)");
    f->add_option("--samples", fig.samples, "Random phase matrices per point")
        ->check(CLI::NonNegativeNumber);
    f->add_option("--seed", fig.seed, "RNG seed (default: COHKIT_SEED, else 0)");
    f->add_option("--out", fig.out, "Output CSV (default stdout)");

    MetrologyArgs met;
    auto *mt = app.add_subcommand("metrology", "Phase estimation through exp(-i H phi)");
    mt->require_subcommand(1);
    auto *sw = mt->add_subcommand("sweep", "Model and matrix-path signal over a phi grid");
    auto *es = mt->add_subcommand("estimate", "Least-squares phase estimate");
    for (auto *c : {sw, es}) {
        c->add_option("--energies", met.energies, "Comma-separated energies")
            ->required()
            ->delimiter(',');
        c->add_option("--lo", met.lo, "Lower phi bound");
        c->add_option("--hi", met.hi, "Upper phi bound");
        c->add_option("--out", met.out, "Output file (default stdout)");
    }
    sw->add_option("--points", met.points, "Grid size")->check(CLI::PositiveNumber);
    es->add_option("--samples-file", met.samples_file, "probe,measured,noise_sigma CSV");
    es->add_option("--true-phi", met.true_phi, "Simulate readings at this phase");
    es->add_option("--n", met.n, "Number of simulated readings");
    es->add_option("--noise", met.noise, "Gaussian noise sigma")->check(CLI::NonNegativeNumber);
    es->add_option("--seed", met.seed, "RNG seed (default: COHKIT_SEED, else 0)");
    es->add_option("--write-samples", met.write_samples, "Save simulated readings");

    std::string validate_path;
    Tolerances validate_tol;
    auto *v = app.add_subcommand("validate", "Check that a file parses and validates");
    v->add_option("file", validate_path, "Matrix, phase or record file")->required();
    add_tolerances(v, validate_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitArgument;
    }

    try {
        if (*m) return run_measure(measure);
        if (*w) return run_witness(witness);
        if (*t) return run_table1(table_csv, table_out);
        if (*f) return run_fig1(fig);
        if (*sw) return run_sweep(met);
        if (*es) return run_estimate(met);
        if (*v) return run_validate(validate_path, validate_tol);
    } catch (const Failure &e) {
        std::cerr << "error [" << cohkit_status_name(e.status) << "]: " << e.message << '\n';
        return exit_code(e.status);
    } catch (const ArgumentError &e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitArgument;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitArgument;
}
