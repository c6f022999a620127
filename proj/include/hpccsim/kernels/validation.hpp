#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "hpccsim/kernels/types.hpp"

namespace hpccsim {

// Residual formulas of the four application benchmarks. The reference values
// come from a higher-precision run; the norm is the infinity norm except
// where the formula asks for the Frobenius norm, epsilon is the 32-bit
// machine epsilon and the pass threshold is 16.

namespace detail {

inline ValidationReport make_residual_report(double residual, const char* norm) {
    ValidationReport r;
    r.residual = residual;
    r.threshold = kResidualThreshold;
    r.passed = residual < r.threshold;
    r.norm_used = norm;
    return r;
}

} // namespace detail

/// PTRANS: ||C - C'||_inf / (eps * n).
inline ValidationReport ptrans_residual(const Matrix& C, const Matrix& C_ref) {
    if (C.n != C_ref.n) throw ParamError("ptrans_residual: order mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < C.data.size(); ++i) {
        worst = std::max(worst, std::abs(static_cast<double>(C.data[i]) - C_ref.data[i]));
    }
    return detail::make_residual_report(worst / (kFloatEpsilon * C.n), "inf");
}

/// FFT: ||d - d'||_inf / (eps * ld(n)).
inline ValidationReport fft_residual(std::span<const Complex> d,
                                     std::span<const std::complex<double>> d_ref) {
    if (d.size() != d_ref.size() || d.empty()) throw ParamError("fft_residual: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        worst = std::max(worst, std::abs(std::complex<double>(d[i]) - d_ref[i]));
    }
    const double ld_n = std::log2(static_cast<double>(d.size()));
    return detail::make_residual_report(worst / (kFloatEpsilon * ld_n), "inf");
}

/// GEMM: ||C - C'||_inf / (eps * n * ||C||_F).
inline ValidationReport gemm_residual(const Matrix& C, std::span<const double> C_ref) {
    if (C.data.size() != C_ref.size()) throw ParamError("gemm_residual: size mismatch");
    double worst = 0.0;
    double frob = 0.0;
    for (std::size_t i = 0; i < C.data.size(); ++i) {
        const double v = C.data[i];
        worst = std::max(worst, std::abs(v - C_ref[i]));
        frob += v * v;
    }
    frob = std::sqrt(frob);
    return detail::make_residual_report(worst / (kFloatEpsilon * C.n * frob), "inf/frobenius");
}

/// HPL: ||A*x - b||_inf / (eps * ||A||_inf * n), A*x evaluated in double.
inline ValidationReport hpl_residual(const Matrix& A, std::span<const float> x,
                                     std::span<const float> b) {
    const int n = A.n;
    if (static_cast<int>(x.size()) != n || static_cast<int>(b.size()) != n) {
        throw ParamError("hpl_residual: size mismatch");
    }
    double worst = 0.0;
    double norm_a = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            row += static_cast<double>(A.at(i, j)) * static_cast<double>(x[static_cast<std::size_t>(j)]);
            row_sum += std::abs(static_cast<double>(A.at(i, j)));
        }
        worst = std::max(worst, std::abs(row - b[static_cast<std::size_t>(i)]));
        norm_a = std::max(norm_a, row_sum);
    }
    return detail::make_residual_report(worst / (kFloatEpsilon * norm_a * n), "inf");
}

} // namespace hpccsim
