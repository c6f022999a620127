#include <catch2/catch_amalgamated.hpp>

#include "hpccsim/kernels/fft.hpp"
#include "hpccsim/kernels/validation.hpp"
#include "oracles.hpp"

using namespace hpccsim;
using Catch::Approx;

namespace {

std::vector<Complex> random_signal(std::size_t n, std::uint64_t seed) {
    std::vector<Complex> v(n);
    DataRng rng(seed);
    for (auto& z : v) z = Complex(rng.next_pm1(), rng.next_pm1());
    return v;
}

// inverse transform built from conjugation around the forward kernel
std::vector<Complex> inverse_fft(std::vector<Complex> v, int log_size) {
    for (auto& z : v) z = std::conj(z);
    fft_inplace(v, log_size);
    const float scale = 1.0f / static_cast<float>(v.size());
    for (auto& z : v) z = std::conj(z) * scale;
    return v;
}

} // namespace

TEST_CASE("impulse transforms to an all-ones spectrum") {
    std::vector<Complex> v(1 << 6, Complex(0.0f, 0.0f));
    v[0] = Complex(1.0f, 0.0f);
    fft_inplace(v, 6);
    for (const Complex& z : v) {
        REQUIRE(z.real() == 1.0f);
        REQUIRE(z.imag() == 0.0f);
    }
}

TEST_CASE("constant input concentrates in the zero bin") {
    const float c = 0.75f;
    std::vector<Complex> v(1 << 8, Complex(c, 0.0f));
    fft_inplace(v, 8);
    CHECK(v[0].real() == Approx(c * 256.0f));
    CHECK(v[0].imag() == Approx(0.0f).margin(1e-3));
    for (std::size_t k = 1; k < v.size(); ++k) {
        CHECK(std::abs(v[k]) == Approx(0.0).margin(1e-3));
    }
}

TEST_CASE("size-4096 transform stays within the residual budget of the DFT oracle") {
    const auto input = random_signal(1 << 12, 2024);
    auto v = input;
    fft_inplace(v, 12);
    const auto expected = oracle::naive_dft(input);
    const ValidationReport val = fft_residual(v, expected);
    INFO("residual " << val.residual);
    CHECK(val.residual < kResidualThreshold);
    CHECK(val.passed);
}

TEST_CASE("library double-precision reference agrees with the DFT oracle") {
    const auto input = random_signal(1 << 10, 99);
    const auto ref = fft_reference(input);
    const auto expected = oracle::naive_dft(input);
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        worst = std::max(worst, std::abs(ref[i] - expected[i]));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("forward-inverse roundtrip returns the input") {
    const auto input = random_signal(1 << 12, 4242);
    auto v = input;
    fft_inplace(v, 12);
    const auto back = inverse_fft(v, 12);
    // reuse the FFT residual rule on the roundtrip error
    std::vector<std::complex<double>> expected(input.begin(), input.end());
    const ValidationReport val = fft_residual(back, expected);
    CHECK(val.residual < kResidualThreshold);
}

TEST_CASE("batch processing transforms every vector") {
    std::vector<std::vector<Complex>> batch;
    for (int i = 0; i < 5; ++i) batch.push_back(random_signal(1 << 8, 50 + i));
    const auto out = fft_run(batch, 8);
    REQUIRE(out.size() == batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        auto single = batch[i];
        fft_inplace(single, 8);
        REQUIRE(out[i] == single);
    }
}

TEST_CASE("shape violations") {
    std::vector<Complex> v(100);
    CHECK_THROWS_AS(fft_inplace(v, 7), ParamError);
    std::vector<Complex> big(1 << 13);
    CHECK_THROWS_AS(fft_inplace(big, 13), ParamError); // beyond the size-12 limit
}
