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

#include "cohkit/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cohkit::io {

using nlohmann::json;

const char *to_string(MatrixKind kind) noexcept {
    switch (kind) {
    case MatrixKind::Density: return "density";
    case MatrixKind::Hermitian: return "hermitian";
    case MatrixKind::Pure: return "pure";
    }
    return "unknown";
}

// ------------------------------------------------------------ matrix files

static MatrixFile from_matrix(MatrixKind kind, const Matrix &m) {
    MatrixFile f;
    f.kind = kind;
    f.dim = m.dim();
    f.entries.assign(m.data().begin(), m.data().end());
    return f;
}

MatrixFile MatrixFile::from(const DensityMatrix &rho) {
    return from_matrix(MatrixKind::Density, rho.op().matrix());
}

MatrixFile MatrixFile::from(const HermitianOperator &op) {
    return from_matrix(MatrixKind::Hermitian, op.matrix());
}

MatrixFile MatrixFile::from(const PureState &phi) {
    MatrixFile f;
    f.kind = MatrixKind::Pure;
    f.dim = phi.dim();
    f.entries.assign(phi.amplitudes().begin(), phi.amplitudes().end());
    return f;
}

HermitianOperator MatrixFile::to_hermitian(double tol) const {
    if (kind == MatrixKind::Pure) {
        throw Error(ErrorCode::InvalidArgument, "expected a matrix file, got a pure state");
    }
    return HermitianOperator::make(Matrix(dim, entries), tol);
}

DensityMatrix MatrixFile::to_density(double trace_tol, double psd_tol) const {
    if (kind == MatrixKind::Pure) return to_pure(trace_tol).projector();
    return DensityMatrix::make(to_hermitian(), trace_tol, psd_tol);
}

PureState MatrixFile::to_pure(double tol) const {
    if (kind != MatrixKind::Pure) {
        throw Error(ErrorCode::InvalidArgument, "expected a pure-state file");
    }
    return PureState::make(entries, tol);
}

static Error parse_error(const std::string &what) {
    return Error(ErrorCode::ParseError, what);
}

static json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception &e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

static std::size_t read_dim(const json &doc) {
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
        throw parse_error("'dim' must be a positive integer");
    }
    return doc["dim"].get<std::size_t>();
}

MatrixFile parse_matrix(std::string_view text, double trace_tol, double psd_tol) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw parse_error("matrix file must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw parse_error("'kind' must be one of density, hermitian, pure");
    }
    MatrixFile f;
    const auto kind = doc["kind"].get<std::string>();
    if (kind == "density") {
        f.kind = MatrixKind::Density;
    } else if (kind == "hermitian") {
        f.kind = MatrixKind::Hermitian;
    } else if (kind == "pure") {
        f.kind = MatrixKind::Pure;
    } else {
        throw parse_error("unknown kind '" + kind + "'");
    }
    f.dim = read_dim(doc);
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw parse_error("'entries' must be an array of [re, im] pairs");
    }
    const auto &entries = doc["entries"];
    const std::size_t expected = f.kind == MatrixKind::Pure ? f.dim : f.dim * f.dim;
    if (entries.size() != expected) {
        throw parse_error("expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(entries.size()));
    }
    f.entries.reserve(expected);
    for (const auto &e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw parse_error("each entry must be a [re, im] pair of numbers");
        }
        f.entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    if (f.kind == MatrixKind::Density) {
        (void)f.to_density(trace_tol, psd_tol);
    } else if (f.kind == MatrixKind::Hermitian) {
        (void)f.to_hermitian();
    } else {
        (void)f.to_pure(trace_tol);
    }
    return f;
}

static std::string json_number(double x) { return json(x).dump(); }

std::string dump_matrix(const MatrixFile &file) {
    std::ostringstream os;
    os << "{\n  \"kind\": \"" << to_string(file.kind) << "\",\n  \"dim\": " << file.dim
       << ",\n  \"entries\": [";
    for (std::size_t i = 0; i < file.entries.size(); ++i) {
        os << (i == 0 ? "\n    " : ",\n    ") << '[' << json_number(file.entries[i].real())
           << ", " << json_number(file.entries[i].imag()) << ']';
    }
    os << "\n  ]\n}\n";
    return os.str();
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

MatrixFile read_matrix_file(const std::string &path, double trace_tol, double psd_tol) {
    return parse_matrix(read_text(path), trace_tol, psd_tol);
}

void write_matrix_file(const std::string &path, const MatrixFile &file) {
    write_text(path, dump_matrix(file));
}

PhaseMatrix parse_phases(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw parse_error("phase file must be a JSON object");
    const std::size_t d = read_dim(doc);
    if (!doc.contains("theta") || !doc["theta"].is_array()) {
        throw parse_error("'theta' must be an array of angles");
    }
    std::vector<double> theta;
    for (const auto &t : doc["theta"]) {
        if (!t.is_number()) throw parse_error("angles must be numbers");
        theta.push_back(t.get<double>());
    }
    if (theta.size() != PhaseMatrix::pair_count(d)) {
        throw parse_error("expected " + std::to_string(PhaseMatrix::pair_count(d)) +
                          " angles for dim " + std::to_string(d));
    }
    return PhaseMatrix(d, std::move(theta));
}

std::string dump_phases(const PhaseMatrix &p) {
    std::ostringstream os;
    os << "{\"dim\": " << p.dim() << ", \"theta\": [";
    for (std::size_t i = 0; i < p.upper().size(); ++i) {
        os << (i ? ", " : "") << json_number(p.upper()[i]);
    }
    os << "]}\n";
    return os.str();
}

PhaseMatrix read_phase_file(const std::string &path) { return parse_phases(read_text(path)); }

// -------------------------------------------------------------------- CSV

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find('\n', start);
        auto line = trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (!line.empty()) out.push_back(line);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view s, std::size_t line, const char *field) {
    double v = 0.0;
    const auto *first = s.data();
    const auto *last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || s.empty()) {
        throw parse_error("line " + std::to_string(line) + ": field '" + field +
                          "' is not a number: '" + std::string(s) + "'");
    }
    return v;
}

int decimals_of(std::string_view s) {
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) return 0;
    int n = 0;
    for (std::size_t i = dot + 1; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) ++n;
    return n;
}

} // namespace

std::vector<ExperimentRecord> parse_records_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty()) throw parse_error("record CSV is empty");
    const auto header = split(lines.front(), ',');
    const std::vector<std::string_view> want{"label",      "N",          "fidelity",
                                             "fidelity_err", "population", "population_err"};
    if (header != want) {
        throw parse_error("record CSV header must be "
                          "label,N,fidelity,fidelity_err,population,population_err");
    }
    if (lines.size() == 1) throw parse_error("record CSV has no data rows");
    std::vector<ExperimentRecord> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        const std::size_t ln = i + 1;
        if (f.size() != want.size()) {
            throw parse_error("line " + std::to_string(ln) + ": expected 6 fields, got " +
                              std::to_string(f.size()));
        }
        ExperimentRecord r;
        r.label = std::string(f[0]);
        const double n = parse_number(f[1], ln, "N");
        if (n != static_cast<int>(n)) {
            throw parse_error("line " + std::to_string(ln) + ": N must be an integer");
        }
        r.photons = static_cast<int>(n);
        r.fidelity = parse_number(f[2], ln, "fidelity");
        r.fidelity_err = parse_number(f[3], ln, "fidelity_err");
        r.population = parse_number(f[4], ln, "population");
        r.population_err = parse_number(f[5], ln, "population_err");
        const int k = std::max(decimals_of(f[2]), decimals_of(f[4]));
        r.decimals = k == 0 ? 3 : k;
        validate_record(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExperimentRecord> read_records_csv(const std::string &path) {
    return parse_records_csv(read_text(path));
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string table1_csv(const std::vector<BoundRow> &rows) {
    std::string out = "label,bound_w3,bound_w3_err,bound_w1,bound_w1_err\n";
    for (const auto &r : rows) {
        out += r.label + ',' + format_double(r.bound_w3.value) + ',' +
               format_double(r.bound_w3.err) + ',' + format_double(r.bound_w1.value) + ',' +
               format_double(r.bound_w1.err) + '\n';
    }
    return out;
}

std::string fig1_csv(const std::vector<Fig1Point> &points) {
    const bool sampled = !points.empty() && !points.front().sampled.empty();
    std::string out = sampled ? "varphi,c_l1,optimal_bound,sample,bound,negative\n"
                              : "varphi,c_l1,optimal_bound\n";
    for (const auto &p : points) {
        const std::string prefix = format_double(p.varphi) + ',' + format_double(p.c_l1) +
                                   ',' + format_double(p.optimal_bound);
        if (!sampled) {
            out += prefix + '\n';
            continue;
        }
        for (std::size_t s = 0; s < p.sampled.size(); ++s) {
            out += prefix + ',' + std::to_string(s) + ',' + format_double(p.sampled[s]) + ',' +
                   (p.sampled[s] < 0.0 ? "1" : "0") + '\n';
        }
    }
    return out;
}

std::string sweep_csv(const Hamiltonian &h, const std::vector<double> &grid) {
    std::string out = "phi,model,matrix\n";
    for (double phi : grid) {
        out += format_double(phi) + ',' + format_double(expected_signal(h, phi)) + ',' +
               format_double(matrix_signal(h, phi)) + '\n';
    }
    return out;
}

std::vector<SignalSample> parse_samples_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty()) throw parse_error("sample CSV is empty");
    const auto header = split(lines.front(), ',');
    const std::vector<std::string_view> want{"probe", "measured", "noise_sigma"};
    if (header != want) throw parse_error("sample CSV header must be probe,measured,noise_sigma");
    std::vector<SignalSample> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 3) {
            throw parse_error("line " + std::to_string(i + 1) + ": expected 3 fields");
        }
        out.push_back({parse_number(f[0], i + 1, "probe"), parse_number(f[1], i + 1, "measured"),
                       parse_number(f[2], i + 1, "noise_sigma")});
    }
    return out;
}

std::string samples_csv(const std::vector<SignalSample> &samples) {
    std::string out = "probe,measured,noise_sigma\n";
    for (const auto &s : samples) {
        out += format_double(s.probe) + ',' + format_double(s.measured) + ',' +
               format_double(s.noise_sigma) + '\n';
    }
    return out;
}

void RunConfig::validate() const {
    if (!(trace_tol > 0.0 && psd_tol > 0.0 && sdp_tol > 0.0 && detection_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "all tolerances must be > 0");
    }
    if (sdp_max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 1");
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli, const char *env_value) {
    if (cli) return *cli;
    if (env_value == nullptr || *env_value == '\0') return 0;
    std::uint64_t v = 0;
    const std::string_view s(env_value);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::InvalidArgument, "COHKIT_SEED is not an unsigned integer");
    }
    return v;
}

} // namespace cohkit::io
