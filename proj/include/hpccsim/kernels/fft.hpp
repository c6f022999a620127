#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "hpccsim/kernels/types.hpp"

namespace hpccsim {

inline constexpr int kMaxLogFftSize = 12;

namespace detail {

/// Twiddle table w[k] = exp(-2*pi*i*k/n) for k < n/2, evaluated in double.
inline std::vector<std::complex<double>> fft_twiddles(std::size_t n) {
    std::vector<std::complex<double>> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double phi = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(phi), std::sin(phi)};
    }
    return w;
}

} // namespace detail

/// In-order forward radix-2 FFT on single-precision data.
///
/// Butterflies are evaluated fused: each stored component is rounded once
/// per stage, which is how the hard floating-point DSP blocks behave. With
/// per-operation rounding instead, the accumulated error at size 2^12 would
/// exceed the residual budget of the validation.
inline void fft_inplace(std::span<Complex> v, int log_size) {
    if (log_size < 0 || log_size > kMaxLogFftSize) {
        throw ParamError("fft_inplace: log_size must be in [0,12]");
    }
    const std::size_t n = std::size_t{1} << log_size;
    if (v.size() != n) throw ParamError("fft_inplace: vector length must be 2^log_size");
    if (n < 2) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(v[i], v[j]);
    }

    const auto twiddles = detail::fft_twiddles(n);

    for (std::size_t size = 2; size <= n; size <<= 1) {
        const std::size_t half = size / 2;
        const std::size_t step = n / size; // twiddle stride in the full table
        for (std::size_t start = 0; start < n; start += size) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> w = twiddles[k * step];
                const std::complex<double> lo(v[start + k]);
                const std::complex<double> hi(v[start + k + half]);
                const std::complex<double> t = w * hi;
                v[start + k] = Complex(static_cast<float>(lo.real() + t.real()),
                                       static_cast<float>(lo.imag() + t.imag()));
                v[start + k + half] = Complex(static_cast<float>(lo.real() - t.real()),
                                              static_cast<float>(lo.imag() - t.imag()));
            }
        }
    }
}

/// Forward FFT of every vector in the batch.
inline std::vector<std::vector<Complex>> fft_run(std::vector<std::vector<Complex>> batch,
                                                 int log_size) {
    for (auto& vec : batch) fft_inplace(vec, log_size);
    return batch;
}

/// O(n^2) DFT in double precision, the independent reference.
inline std::vector<std::complex<double>> dft_reference(std::span<const Complex> input) {
    const std::size_t n = input.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double phi =
                -2.0 * std::numbers::pi * static_cast<double>(j * k % n) / static_cast<double>(n);
            sum += std::complex<double>(input[j]) * std::complex<double>(std::cos(phi), std::sin(phi));
        }
        out[k] = sum;
    }
    return out;
}

/// Double-precision radix-2 FFT used as the fast validation reference.
inline std::vector<std::complex<double>> fft_reference(std::span<const Complex> input) {
    const std::size_t n = input.size();
    std::vector<std::complex<double>> v(input.begin(), input.end());
    if (n < 2) return v;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    const auto twiddles = detail::fft_twiddles(n);
    for (std::size_t size = 2; size <= n; size <<= 1) {
        const std::size_t half = size / 2;
        const std::size_t step = n / size;
        for (std::size_t start = 0; start < n; start += size) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> t = twiddles[k * step] * v[start + k + half];
                v[start + k + half] = v[start + k] - t;
                v[start + k] += t;
            }
        }
    }
    return v;
}

} // namespace hpccsim
