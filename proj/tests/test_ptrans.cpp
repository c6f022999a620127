#include <catch2/catch_amalgamated.hpp>

#include "hpccsim/kernels/ptrans.hpp"
#include "hpccsim/kernels/validation.hpp"
#include "oracles.hpp"

using namespace hpccsim;

TEST_CASE("zero matrices transpose to zero") {
    const Matrix A = make_matrix(32), B = make_matrix(32);
    const Matrix C = ptrans_run(A, B, 8);
    for (float v : C.data) REQUIRE(v == 0.0f);
}

TEST_CASE("transposing twice with B=0 recovers the input") {
    const Matrix A = random_matrix(64, 7);
    const Matrix zero = make_matrix(64);
    const Matrix once = ptrans_run(A, zero, 16);
    const Matrix twice = ptrans_run(once, zero, 16);
    REQUIRE(twice.data == A.data);
}

TEST_CASE("blocked result equals the naive oracle exactly") {
    for (int n : {16, 64, 256, 512}) {
        const Matrix A = random_matrix(n, 11 + static_cast<std::uint64_t>(n));
        const Matrix B = random_matrix(n, 13 + static_cast<std::uint64_t>(n));
        for (int block : {n / 4, n}) {
            const Matrix C = ptrans_run(A, B, block);
            const Matrix expected = oracle::naive_transpose_add(A, B);
            REQUIRE(C.data == expected.data);
            const ValidationReport val = ptrans_residual(C, expected);
            CHECK(val.residual == 0.0);
            CHECK(val.passed);
        }
    }
}

TEST_CASE("divisibility violation") {
    const Matrix A = make_matrix(30), B = make_matrix(30);
    CHECK_THROWS_AS(ptrans_run(A, B, 8), ParamError);
    const Matrix C = make_matrix(32);
    CHECK_THROWS_AS(ptrans_run(A, C, 2), ParamError);
}

TEST_CASE("ptrans residual detects corruption") {
    const Matrix A = random_matrix(64, 3), B = random_matrix(64, 5);
    Matrix C = ptrans_run(A, B, 16);
    C.at(10, 20) += 1.0f;
    const ValidationReport val = ptrans_residual(C, oracle::naive_transpose_add(A, B));
    CHECK(val.residual > kResidualThreshold);
    CHECK_FALSE(val.passed);
}
