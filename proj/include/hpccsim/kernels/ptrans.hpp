#pragma once

#include <vector>

#include "hpccsim/kernels/types.hpp"

namespace hpccsim {

/// Blocked transpose-add C = A^T + B. Per block the read pipeline stages the
/// A block transposed in local memory, the write pipeline then combines it
/// with the B block and emits C. Elementwise a single addition, so the result
/// is bit-identical to the unblocked formula.
inline Matrix ptrans_run(const Matrix& A, const Matrix& B, int block) {
    const int n = A.n;
    if (B.n != n) throw ParamError("ptrans_run: matrix orders differ");
    if (block < 1 || n % block != 0) {
        throw ParamError("ptrans_run: matrix order must be divisible by block");
    }

    Matrix C = make_matrix(n);
    std::vector<float> staged(static_cast<std::size_t>(block) * block);
    for (int bi = 0; bi < n; bi += block) {
        for (int bj = 0; bj < n; bj += block) {
            // read pipeline: block (bi,bj) of A, transposed while staging
            for (int i = 0; i < block; ++i) {
                for (int j = 0; j < block; ++j) {
                    staged[static_cast<std::size_t>(j) * block + i] = A.at(bi + i, bj + j);
                }
            }
            // write pipeline: C(bj,bi) = staged + B(bj,bi)
            for (int j = 0; j < block; ++j) {
                for (int i = 0; i < block; ++i) {
                    C.at(bj + j, bi + i) = staged[static_cast<std::size_t>(j) * block + i] +
                                           B.at(bj + j, bi + i);
                }
            }
        }
    }
    return C;
}

} // namespace hpccsim
