#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "hpccsim/kernels/types.hpp"

namespace hpccsim {

/// Packed LU factors (unit lower triangle below the diagonal, U on and above)
/// plus the row swap chosen for every column.
struct LuFactorization {
    Matrix lu;
    std::vector<int> pivots; // pivots[k] = row swapped into position k
};

/// Blocked right-looking LU factorization with block-wise partial pivoting:
/// the pivot search for column k is restricted to the current diagonal block,
/// not the whole column. Panel factorization, triangular update of the block
/// row and a register-tiled Schur update of the trailing matrix follow the
/// kernel's three-level layout.
inline LuFactorization lu_gefa_blocked(Matrix A, int block_log, int reg_block_log) {
    const int n = A.n;
    if (block_log < 0 || reg_block_log < 0) {
        throw ParamError("lu_gefa_blocked: block logs must be >= 0");
    }
    const int block = 1 << block_log;
    const int reg = 1 << reg_block_log;
    if (n % block != 0) throw ParamError("lu_gefa_blocked: order must be divisible by 2^block_log");
    if (block % reg != 0) {
        throw ParamError("lu_gefa_blocked: block must be divisible by 2^register_block_log");
    }

    std::vector<int> pivots(static_cast<std::size_t>(n));
    for (int kb = 0; kb < n; kb += block) {
        const int kend = kb + block;

        // panel: factor the diagonal-and-below part of columns kb..kend-1,
        // pivot search limited to rows of the diagonal block
        for (int k = kb; k < kend; ++k) {
            int pivot = k;
            float best = std::abs(A.at(k, k));
            for (int i = k + 1; i < kend; ++i) {
                const float cand = std::abs(A.at(i, k));
                if (cand > best) {
                    best = cand;
                    pivot = i;
                }
            }
            pivots[static_cast<std::size_t>(k)] = pivot;
            if (A.at(pivot, k) == 0.0f) {
                throw SingularityError("lu_gefa_blocked: zero pivot in column " + std::to_string(k));
            }
            if (pivot != k) {
                for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(pivot, j));
            }
            const float inv = 1.0f / A.at(k, k);
            for (int i = k + 1; i < n; ++i) {
                A.at(i, k) *= inv;
            }
            // update the remaining panel columns
            for (int i = k + 1; i < n; ++i) {
                const float l = A.at(i, k);
                for (int j = k + 1; j < kend; ++j) {
                    A.at(i, j) -= l * A.at(k, j);
                }
            }
        }

        if (kend == n) break;

        // block row: U(kb..kend, kend..n) = L(panel)^-1 * A(kb..kend, kend..n)
        for (int k = kb; k < kend; ++k) {
            for (int i = k + 1; i < kend; ++i) {
                const float l = A.at(i, k);
                for (int j = kend; j < n; ++j) {
                    A.at(i, j) -= l * A.at(k, j);
                }
            }
        }

        // Schur update of the trailing matrix in register tiles:
        // A(kend.., kend..) -= L(kend.., kb..kend) * U(kb..kend, kend..)
        for (int ii = kend; ii < n; ii += reg) {
            for (int jj = kend; jj < n; jj += reg) {
                for (int kk = kb; kk < kend; kk += reg) {
                    for (int i = ii; i < ii + reg; ++i) {
                        for (int j = jj; j < jj + reg; ++j) {
                            float sum = A.at(i, j);
                            for (int k = kk; k < kk + reg; ++k) {
                                sum -= A.at(i, k) * A.at(k, j);
                            }
                            A.at(i, j) = sum;
                        }
                    }
                }
            }
        }
    }

    return LuFactorization{std::move(A), std::move(pivots)};
}

/// Solves L*y = b then U*x = y on the packed factors, applying the recorded
/// row swaps the way the factorization did.
inline std::vector<float> hpl_solve(const Matrix& lu, std::span<const int> pivots,
                                    std::vector<float> b) {
    const int n = lu.n;
    if (static_cast<int>(b.size()) != n || static_cast<int>(pivots.size()) != n) {
        throw ParamError("hpl_solve: size mismatch");
    }
    // forward substitution with unit lower triangle
    for (int k = 0; k < n; ++k) {
        const int p = pivots[static_cast<std::size_t>(k)];
        if (p != k) std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(p)]);
        const float yk = b[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            b[static_cast<std::size_t>(i)] -= lu.at(i, k) * yk;
        }
    }
    // backward substitution
    for (int k = n - 1; k >= 0; --k) {
        const float diag = lu.at(k, k);
        if (diag == 0.0f) {
            throw SingularityError("hpl_solve: zero diagonal in U at " + std::to_string(k));
        }
        float sum = b[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < n; ++j) {
            sum -= lu.at(k, j) * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(k)] = sum / diag;
    }
    return b;
}

/// Diagonally dominant random test system: entries uniform in [-1,1] with n
/// added on the diagonal. Block pivoting is numerically fragile on general
/// matrices, which matches the published large LINPACK error.
inline Matrix diagonally_dominant_matrix(int n, std::uint64_t seed) {
    Matrix A = random_matrix(n, seed);
    for (int i = 0; i < n; ++i) A.at(i, i) += static_cast<float>(n);
    return A;
}

} // namespace hpccsim
