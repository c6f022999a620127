#include <catch2/catch_amalgamated.hpp>

#include "hpccsim/kernels/gemm.hpp"
#include "hpccsim/kernels/validation.hpp"
#include "oracles.hpp"

using namespace hpccsim;

TEST_CASE("alpha=0 beta=1 returns C unchanged") {
    const Matrix A = random_matrix(64, 21), B = random_matrix(64, 22), C = random_matrix(64, 23);
    const Matrix out = gemm_run(A, B, C, 0.0f, 1.0f, 16, 4);
    REQUIRE(out.data == C.data);
}

TEST_CASE("multiplying with the identity returns A") {
    const Matrix A = random_matrix(32, 31);
    const Matrix I = identity_matrix(32);
    const Matrix zero = make_matrix(32);
    const Matrix out = gemm_run(A, I, zero, 1.0f, 0.0f, 8, 4);
    REQUIRE(out.data == A.data);
}

TEST_CASE("blocked multiply matches the double-precision oracle") {
    for (int n : {64, 128, 512}) {
        const Matrix A = random_matrix(n, 100 + static_cast<std::uint64_t>(n));
        const Matrix B = random_matrix(n, 200 + static_cast<std::uint64_t>(n));
        const Matrix C = random_matrix(n, 300 + static_cast<std::uint64_t>(n));
        const Matrix out = gemm_run(A, B, C, 0.5f, 2.0f, std::min(32, n), 8);
        const auto expected = oracle::naive_gemm(A, B, C, 0.5, 2.0);
        const ValidationReport val = gemm_residual(out, expected);
        INFO("n=" << n << " residual=" << val.residual);
        CHECK(val.residual < kResidualThreshold);
        CHECK(val.passed);
    }
}

TEST_CASE("library reference agrees with the test oracle") {
    const Matrix A = random_matrix(32, 1), B = random_matrix(32, 2), C = random_matrix(32, 3);
    CHECK(gemm_reference(A, B, C, 0.5, 2.0) == oracle::naive_gemm(A, B, C, 0.5, 2.0));
}

TEST_CASE("divisibility violations") {
    const Matrix A = make_matrix(48), B = make_matrix(48), C = make_matrix(48);
    CHECK_THROWS_AS(gemm_run(A, B, C, 1.0f, 1.0f, 32, 8), ParamError);  // 48 % 32
    CHECK_THROWS_AS(gemm_run(A, B, C, 1.0f, 1.0f, 16, 6), ParamError);  // 16 % 6
    const Matrix D = make_matrix(32);
    CHECK_THROWS_AS(gemm_run(A, B, D, 1.0f, 1.0f, 16, 8), ParamError);  // order mismatch
}

TEST_CASE("gemm residual detects corruption") {
    const Matrix A = random_matrix(64, 4), B = random_matrix(64, 5), C = random_matrix(64, 6);
    Matrix out = gemm_run(A, B, C, 1.0f, 1.0f, 16, 8);
    out.at(0, 0) += 100.0f;
    const ValidationReport val = gemm_residual(out, oracle::naive_gemm(A, B, C, 1.0, 1.0));
    CHECK_FALSE(val.passed);
}
