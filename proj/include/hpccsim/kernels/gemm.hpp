#pragma once

#include <algorithm>
#include <vector>

#include "hpccsim/kernels/types.hpp"

namespace hpccsim {

/// Blocked single-precision matrix multiply C' = alpha*A*B + beta*C.
///
/// Mirrors the kernel's three levels: block*block tiles of A and B are staged
/// in local memory, the block product accumulates into a local result tile,
/// and the innermost computation runs on reg_block*reg_block register tiles.
/// The float accumulation order therefore differs from the naive triple loop.
inline Matrix gemm_run(const Matrix& A, const Matrix& B, const Matrix& C, float alpha, float beta,
                       int block, int reg_block) {
    const int n = A.n;
    if (B.n != n || C.n != n) throw ParamError("gemm_run: matrix orders differ");
    if (block < 1 || n % block != 0) {
        throw ParamError("gemm_run: matrix order must be divisible by block");
    }
    if (reg_block < 1 || block % reg_block != 0) {
        throw ParamError("gemm_run: block must be divisible by reg_block");
    }

    Matrix out = make_matrix(n);
    const std::size_t bs = static_cast<std::size_t>(block);
    std::vector<float> a_local(bs * bs), b_local(bs * bs), acc(bs * bs);

    for (int bi = 0; bi < n; bi += block) {
        for (int bj = 0; bj < n; bj += block) {
            std::fill(acc.begin(), acc.end(), 0.0f);
            for (int bk = 0; bk < n; bk += block) {
                for (int i = 0; i < block; ++i) {
                    for (int k = 0; k < block; ++k) {
                        a_local[static_cast<std::size_t>(i) * bs + k] = A.at(bi + i, bk + k);
                    }
                }
                for (int k = 0; k < block; ++k) {
                    for (int j = 0; j < block; ++j) {
                        b_local[static_cast<std::size_t>(k) * bs + j] = B.at(bk + k, bj + j);
                    }
                }
                // register level: reg_block x reg_block tiles over the local blocks
                for (int ii = 0; ii < block; ii += reg_block) {
                    for (int jj = 0; jj < block; jj += reg_block) {
                        for (int kk = 0; kk < block; kk += reg_block) {
                            for (int i = ii; i < ii + reg_block; ++i) {
                                for (int j = jj; j < jj + reg_block; ++j) {
                                    float sum = acc[static_cast<std::size_t>(i) * bs + j];
                                    for (int k = kk; k < kk + reg_block; ++k) {
                                        sum += a_local[static_cast<std::size_t>(i) * bs + k] *
                                               b_local[static_cast<std::size_t>(k) * bs + j];
                                    }
                                    acc[static_cast<std::size_t>(i) * bs + j] = sum;
                                }
                            }
                        }
                    }
                }
            }
            for (int i = 0; i < block; ++i) {
                for (int j = 0; j < block; ++j) {
                    out.at(bi + i, bj + j) = alpha * acc[static_cast<std::size_t>(i) * bs + j] +
                                             beta * C.at(bi + i, bj + j);
                }
            }
        }
    }
    return out;
}

/// Double-precision triple-loop reference of the same formula.
inline std::vector<double> gemm_reference(const Matrix& A, const Matrix& B, const Matrix& C,
                                          double alpha, double beta) {
    const int n = A.n;
    std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < n; ++k) {
                sum += static_cast<double>(A.at(i, k)) * static_cast<double>(B.at(k, j));
            }
            out[static_cast<std::size_t>(i) * n + j] = alpha * sum + beta * C.at(i, j);
        }
    }
    return out;
}

} // namespace hpccsim
