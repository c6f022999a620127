#include <catch2/catch_amalgamated.hpp>

#include "hpccsim/kernels/hpl.hpp"
#include "hpccsim/kernels/validation.hpp"
#include "oracles.hpp"

using namespace hpccsim;
using Catch::Approx;

TEST_CASE("identity factors trivially") {
    const LuFactorization f = lu_gefa_blocked(identity_matrix(16), 2, 1);
    for (int i = 0; i < 16; ++i) {
        CHECK(f.pivots[static_cast<std::size_t>(i)] == i);
        for (int j = 0; j < 16; ++j) {
            CHECK(f.lu.at(i, j) == (i == j ? 1.0f : 0.0f));
        }
    }
}

TEST_CASE("2x2 diagonally dominant elimination") {
    Matrix A = make_matrix(2);
    A.at(0, 0) = 4.0f;
    A.at(0, 1) = 1.0f;
    A.at(1, 0) = 1.0f;
    A.at(1, 1) = 3.0f;
    const LuFactorization f = lu_gefa_blocked(A, 1, 0);
    CHECK(f.lu.at(0, 0) == 4.0f);
    CHECK(f.lu.at(1, 0) == 0.25f);
    CHECK(f.lu.at(1, 1) == 3.0f - 0.25f * 1.0f);
}

TEST_CASE("reconstruction error of a 256x256 diagonally dominant system") {
    const Matrix A = diagonally_dominant_matrix(256, 77);
    const LuFactorization f = lu_gefa_blocked(A, 5, 3);
    const double err = oracle::lu_reconstruction_error(A, f.lu, f.pivots);
    INFO("reconstruction error " << err);
    CHECK(err < 1e-3);
}

TEST_CASE("pivoting stays within the diagonal block") {
    const int n = 16, block_log = 2; // blocks of 4
    const Matrix A = diagonally_dominant_matrix(n, 5);
    const LuFactorization f = lu_gefa_blocked(A, block_log, 0);
    for (int k = 0; k < n; ++k) {
        const int block_end = ((k >> block_log) + 1) << block_log;
        CHECK(f.pivots[static_cast<std::size_t>(k)] >= k);
        CHECK(f.pivots[static_cast<std::size_t>(k)] < block_end);
    }
}

TEST_CASE("solve with the identity returns b") {
    const LuFactorization f = lu_gefa_blocked(identity_matrix(8), 1, 0);
    std::vector<float> b = {1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(hpl_solve(f.lu, f.pivots, b) == b);
}

TEST_CASE("solve with a diagonal matrix divides elementwise") {
    Matrix A = make_matrix(4);
    for (int i = 0; i < 4; ++i) A.at(i, i) = static_cast<float>(i + 1);
    const LuFactorization f = lu_gefa_blocked(A, 1, 0);
    const std::vector<float> b = {2.0f, 6.0f, 12.0f, 20.0f};
    const std::vector<float> x = hpl_solve(f.lu, f.pivots, b);
    for (int i = 0; i < 4; ++i) {
        CHECK(x[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)] / (i + 1));
    }
}

TEST_CASE("full solve passes the residual check") {
    const int n = 256;
    const Matrix A = diagonally_dominant_matrix(n, 90);
    std::vector<float> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        float sum = 0.0f;
        for (int j = 0; j < n; ++j) sum += A.at(i, j);
        b[static_cast<std::size_t>(i)] = sum;
    }
    const LuFactorization f = lu_gefa_blocked(A, 5, 3);
    const std::vector<float> x = hpl_solve(f.lu, f.pivots, b);
    for (float xi : x) CHECK(xi == Approx(1.0f).margin(1e-3));
    const ValidationReport val = hpl_residual(A, x, b);
    INFO("residual " << val.residual);
    CHECK(val.residual < kResidualThreshold);
    CHECK(val.passed);
}

TEST_CASE("an exactly singular block raises a singularity error") {
    Matrix A = make_matrix(4); // all zeros
    CHECK_THROWS_AS(lu_gefa_blocked(A, 1, 0), SingularityError);
}

TEST_CASE("zero diagonal in U fails the solve") {
    Matrix lu = identity_matrix(4);
    lu.at(2, 2) = 0.0f;
    const std::vector<int> pivots = {0, 1, 2, 3};
    std::vector<float> b = {1, 1, 1, 1};
    CHECK_THROWS_AS(hpl_solve(lu, pivots, b), SingularityError);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(lu_gefa_blocked(make_matrix(24), 4, 1), ParamError); // 24 % 16
    CHECK_THROWS_AS(lu_gefa_blocked(make_matrix(16), 2, 3), ParamError); // reg > block
}
