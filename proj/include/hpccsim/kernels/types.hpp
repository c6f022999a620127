#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hpccsim/errors.hpp"

namespace hpccsim {

/// Working precision of the FFT kernel data.
using Complex = std::complex<float>;

/// The three STREAM arrays plus the scale factor, all 32-bit reals.
struct VectorSet {
    std::vector<float> a;
    std::vector<float> b;
    std::vector<float> c;
    float scalar = 0.0f;

    std::size_t size() const { return a.size(); }
};

inline VectorSet make_vector_set(std::size_t n, float a0, float b0, float c0, float scalar) {
    VectorSet v;
    v.a.assign(n, a0);
    v.b.assign(n, b0);
    v.c.assign(n, c0);
    v.scalar = scalar;
    return v;
}

/// RandomAccess data array; the length must be a power of two.
struct UpdateArray {
    std::vector<std::uint64_t> data;

    std::size_t size() const { return data.size(); }
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// d[i] = i, the suite's start state for the update benchmark.
inline UpdateArray make_update_array(std::size_t n) {
    if (!is_power_of_two(n)) throw ParamError("make_update_array: size must be a power of two");
    UpdateArray d;
    d.data.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.data[i] = static_cast<std::uint64_t>(i);
    return d;
}

/// Square single-precision matrix, row major.
struct Matrix {
    int n = 0;
    std::vector<float> data;

    float& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
    float at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

inline Matrix make_matrix(int n, float fill = 0.0f) {
    if (n < 1) throw ParamError("make_matrix: order must be >= 1");
    Matrix m;
    m.n = n;
    m.data.assign(static_cast<std::size_t>(n) * n, fill);
    return m;
}

inline Matrix identity_matrix(int n) {
    Matrix m = make_matrix(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0f;
    return m;
}

/// Result of one benchmark validation. For residual checks the rule is
/// residual < threshold; RandomAccess uses the error-percentage rule.
struct ValidationReport {
    double residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string norm_used;
};

/// Machine epsilon of the kernels' working precision.
inline constexpr double kFloatEpsilon = std::numeric_limits<float>::epsilon();

/// Residual pass threshold, by HPL convention.
inline constexpr double kResidualThreshold = 16.0;

// --- deterministic data generation -------------------------------------------
//
// A fixed generator with an explicit mapping to [-1,1] keeps generated inputs
// bit-identical across standard libraries (std::uniform_real_distribution is
// implementation defined).

class DataRng {
public:
    explicit DataRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // xorshift64*
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    /// Uniform float in [-1, 1].
    float next_pm1() {
        const double u = static_cast<double>(next_u64() >> 11) / static_cast<double>(1ull << 53);
        return static_cast<float>(2.0 * u - 1.0);
    }

private:
    std::uint64_t state_;
};

inline Matrix random_matrix(int n, std::uint64_t seed) {
    Matrix m = make_matrix(n);
    DataRng rng(seed);
    for (auto& v : m.data) v = rng.next_pm1();
    return m;
}

} // namespace hpccsim
