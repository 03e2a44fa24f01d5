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

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <random>

#include "cohkit/io.hpp"
#include "oracles.hpp"

using namespace cohkit;
using namespace cohkit::io;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

bool bit_equal(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

const char *kCsv = "label,N,fidelity,fidelity_err,population,population_err\n"
                   "6a,6,0.710,0.016,0.809,0.015\n"
                   "8c,8,0.59,0.02,0.75,0.03\n";

} // namespace

TEST_CASE("matrix files round-trip bit-exactly") {
    std::mt19937_64 rng(51);
    for (std::size_t d = 1; d <= 6; ++d) {
        auto rho = oracle::to_density(oracle::ginibre_state(rng, d), d);
        auto f = MatrixFile::from(rho);
        auto g = parse_matrix(dump_matrix(f));
        CHECK(g.kind == MatrixKind::Density);
        CHECK(bit_equal(f.entries, g.entries));
        CHECK(g.to_density().op() == rho.op());

        auto h = oracle::to_hermitian(oracle::random_hermitian(rng, d), d);
        auto hf = parse_matrix(dump_matrix(MatrixFile::from(h)));
        CHECK(hf.to_hermitian() == h);

        auto psi = PureState::make(oracle::haar_vector(rng, d));
        auto pf = parse_matrix(dump_matrix(MatrixFile::from(psi)));
        CHECK(pf.kind == MatrixKind::Pure);
        CHECK(pf.entries.size() == d);
        CHECK(bit_equal(pf.entries, MatrixFile::from(psi).entries));
    }
    // Awkward doubles survive too.
    MatrixFile odd{MatrixKind::Hermitian, 1, {Complex(0.1 + 0.2, 0.0)}};
    CHECK(bit_equal(parse_matrix(dump_matrix(odd)).entries, odd.entries));
}

TEST_CASE("matrix file write/read through disk") {
    const auto path = (std::filesystem::temp_directory_path() / "cohkit_io_test.json").string();
    auto rho = DensityMatrix::maximally_mixed(3);
    write_matrix_file(path, MatrixFile::from(rho));
    CHECK(read_matrix_file(path) == MatrixFile::from(rho));
    std::filesystem::remove(path);
    CHECK(code_of([&] { read_matrix_file(path); }) == ErrorCode::IoError);
}

TEST_CASE("matrix file validation errors") {
    CHECK(code_of([] { parse_matrix("{"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_matrix(R"({"kind":"density","dim":2,"entries":[[1,0]]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_matrix(R"({"kind":"fancy","dim":1,"entries":[[1,0]]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_matrix(R"({"kind":"pure","dim":0,"entries":[]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] {
              parse_matrix(R"({"kind":"density","dim":2,"entries":[[0.6,0],[0,0],[0,0],[0.6,0]]})");
          }) == ErrorCode::NotDensity);
    CHECK(code_of([] {
              parse_matrix(R"({"kind":"hermitian","dim":2,"entries":[[0,0],[1,0],[0,0],[0,0]]})");
          }) == ErrorCode::NotHermitian);
    CHECK(code_of([] { parse_matrix(R"({"kind":"pure","dim":2,"entries":[[1,0],[1,0]]})"); }) ==
          ErrorCode::NotNormalized);
}

TEST_CASE("phase files") {
    PhaseMatrix p(3, {0.1, 0.2, 0.3});
    auto q = parse_phases(dump_phases(p));
    CHECK(q.upper() == p.upper());
    CHECK(code_of([] { parse_phases(R"({"dim":3,"theta":[1,2]})"); }) == ErrorCode::ParseError);
}

TEST_CASE("record CSV parsing") {
    auto r = parse_records_csv(kCsv);
    REQUIRE(r.size() == 2);
    CHECK(r[0].label == "6a");
    CHECK(r[0].photons == 6);
    CHECK(r[0].decimals == 3);
    CHECK(r[1].decimals == 2);
    CHECK(r[1].population_err == 0.03);

    // BOM, CRLF and stray whitespace are tolerated.
    std::string crlf = "\xEF\xBB\xBFlabel,N,fidelity,fidelity_err,population,population_err\r\n"
                       " x , 4 , 0.9 , 0.01 , 0.95 , 0.02 \r\n";
    CHECK(parse_records_csv(crlf)[0].fidelity == 0.9);

    CHECK(code_of([] { parse_records_csv(""); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_records_csv("label,N\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] {
              parse_records_csv("label,N,fidelity,fidelity_err,population,population_err\n");
          }) == ErrorCode::ParseError);
    CHECK(code_of([] {
              parse_records_csv("label,N,fidelity,fidelity_err,population,population_err\n"
                                "a,4.5,0.9,0.01,0.9,0.01\n");
          }) == ErrorCode::ParseError);
    CHECK(code_of([] {
              parse_records_csv("label,N,fidelity,fidelity_err,population,population_err\n"
                                "a,4,0.9,abc,0.9,0.01\n");
          }) == ErrorCode::ParseError);
    CHECK(code_of([] {
              parse_records_csv("label,N,fidelity,fidelity_err,population,population_err\n"
                                "a,4,1.9,0.01,0.9,0.01\n");
          }) == ErrorCode::RangeError);
}

TEST_CASE("emitters use full precision") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    auto rows = reproduce_table1(parse_records_csv(kCsv));
    const auto csv = table1_csv(rows);
    CHECK(csv.rfind("label,bound_w3,bound_w3_err,bound_w1,bound_w1_err\n", 0) == 0);
    CHECK(csv.find("6a,") != std::string::npos);

    Fig1Point pt{0.5, 0.1, 0.1, {}};
    CHECK(fig1_csv({pt}) == "varphi,c_l1,optimal_bound\n0.5,0.10000000000000001,0.10000000000000001\n");
    pt.sampled = {0.05, -0.01};
    const auto long_form = fig1_csv({pt});
    CHECK(long_form.find(",sample,bound,negative\n") != std::string::npos);
    CHECK(long_form.find(",1,-0.01,1\n") != std::string::npos);
    CHECK(long_form.find(",0,0.050000000000000003,0\n") != std::string::npos);

    std::vector<SignalSample> s{{0.0, 0.25, 0.0}, {0.1, -0.5, 0.01}};
    auto back = parse_samples_csv(samples_csv(s));
    REQUIRE(back.size() == 2);
    CHECK(back[1].measured == -0.5);
    CHECK(back[1].noise_sigma == 0.01);
}

TEST_CASE("seed resolution and run config") {
    CHECK(resolve_seed(5u, "9") == 5u);
    CHECK(resolve_seed(std::nullopt, "9") == 9u);
    CHECK(resolve_seed(std::nullopt, nullptr) == 0u);
    CHECK(code_of([] { resolve_seed(std::nullopt, "x1"); }) == ErrorCode::InvalidArgument);
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.sdp_tol = 0.0;
    CHECK(code_of([&] { cfg.validate(); }) == ErrorCode::InvalidArgument);
}
