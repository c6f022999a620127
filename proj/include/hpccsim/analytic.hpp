#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "hpccsim/board.hpp"
#include "hpccsim/errors.hpp"

namespace hpccsim {

/// Output of one closed-form performance model. `inputs` records every
/// parameter the formula consumed, keyed by its model symbol.
struct ModelPrediction {
    std::string benchmark;
    std::string metric;
    double value = 0.0;
    std::string unit;
    std::map<std::string, double> inputs;
};

namespace analytic {

// --- STREAM -----------------------------------------------------------------
//
// One LSU moves mem_iface_width bytes per cycle; with one read and one write
// per cycle the data rate per bank is iface_width * f. The kernel clock is
// capped at the memory controller frequency, and each bank's raw bandwidth
// bounds the result: rate = banks * min(width * min(f, f_mem), bank_bw).

inline ModelPrediction stream_max_data_rate(double f_max, int used_banks, double iface_width,
                                            double mem_ctrl_freq, double bank_bandwidth) {
    if (used_banks < 1) throw ParamError("stream_max_data_rate: used_banks must be >= 1");
    if (f_max < 0) throw ParamError("stream_max_data_rate: f_max must be >= 0");
    const double f = std::min(f_max, mem_ctrl_freq);
    const double per_bank = std::min(iface_width * f, bank_bandwidth);
    return ModelPrediction{
        bench::kStream,
        "max_data_rate",
        static_cast<double>(used_banks) * per_bank,
        "B/s",
        {{"f_max", f_max},
         {"n", static_cast<double>(used_banks)},
         {"iface_width", iface_width},
         {"mem_ctrl_freq", mem_ctrl_freq},
         {"mem_max", bank_bandwidth}},
    };
}

inline ModelPrediction stream_max_data_rate(const BoardSpec& board, int used_banks) {
    if (used_banks < 1 || used_banks > board.mem_banks) {
        throw ParamError("stream_max_data_rate: used_banks out of range [1," +
                         std::to_string(board.mem_banks) + "]");
    }
    return stream_max_data_rate(board.kernel_freq_for(bench::kStream), used_banks,
                                board.mem_iface_width, board.mem_ctrl_freq, board.bank_bandwidth);
}

// --- RandomAccess -----------------------------------------------------------
//
// Updates per second of the replicated bank kernels. With i = buf_local/u
// inner iterations and updates = u/n expected hits per kernel per address
// group, a pipeline pass costs l_i = (updates*2*latency + i)/i cycles per
// iteration and u_i = l_i/u cycles per update across all kernels; the rate
// is f/u_i updates per second, reported in GUPS.

inline ModelPrediction randomaccess_gups(double f_max, int banks, int buf_local, int unroll,
                                         int mem_latency) {
    if (banks < 1) throw ParamError("randomaccess_gups: banks must be >= 1");
    if (unroll < 1) throw ParamError("randomaccess_gups: unroll must be >= 1");
    if (buf_local < 1 || buf_local % unroll != 0) {
        throw ParamError("randomaccess_gups: buf_local must be a positive multiple of unroll");
    }
    if (mem_latency < 0) throw ParamError("randomaccess_gups: mem_latency must be >= 0");
    if (f_max < 0) throw ParamError("randomaccess_gups: f_max must be >= 0");

    const double iterations = static_cast<double>(buf_local) / unroll;
    const double updates = static_cast<double>(unroll) / banks; // average, kept rational
    const double latency_per_iteration = (updates * 2.0 * mem_latency + iterations) / iterations;
    const double cycles_per_update = latency_per_iteration / unroll;
    return ModelPrediction{
        bench::kRandomAccess,
        "updates",
        f_max / cycles_per_update * 1e-9,
        "GUPS",
        {{"f_max", f_max},
         {"n", static_cast<double>(banks)},
         {"buf_local", static_cast<double>(buf_local)},
         {"u", static_cast<double>(unroll)},
         {"mem_latency", static_cast<double>(mem_latency)}},
    };
}

// --- PTRANS -----------------------------------------------------------------

/// Clock cycles to transpose-add an n*n matrix. The stall model charges the
/// full memory delay once per block per pipeline: (n^2/u + (n/b)^2 * d) * 2.
/// The simple model assumes one fully pipelined pass: n^2/u + d.
inline std::uint64_t ptrans_cycles(std::uint64_t n, std::uint64_t unroll, std::uint64_t block,
                                   std::uint64_t mem_delay, bool stall_model) {
    if (n == 0 || unroll == 0 || block == 0) {
        throw ParamError("ptrans_cycles: n, unroll and block must be positive");
    }
    if (n % unroll != 0) throw ParamError("ptrans_cycles: n must be divisible by unroll");
    if (n % block != 0) throw ParamError("ptrans_cycles: n must be divisible by block");
    const std::uint64_t transfers = n * n / unroll;
    if (!stall_model) return transfers + mem_delay;
    const std::uint64_t blocks = (n / block) * (n / block);
    return (transfers + blocks * mem_delay) * 2;
}

inline double ptrans_exec_time(std::uint64_t n, std::uint64_t unroll, std::uint64_t block,
                               std::uint64_t mem_delay, bool stall_model, double f_max) {
    if (f_max <= 0) throw ParamError("ptrans_exec_time: f_max must be positive");
    return static_cast<double>(ptrans_cycles(n, unroll, block, mem_delay, stall_model)) / f_max;
}

/// Peak FLOP/s of the transpose-add kernel: unroll additions per cycle at the
/// memory-bound clock.
inline ModelPrediction ptrans_peak_flops(double f_max, double mem_ctrl_freq, int unroll) {
    if (unroll < 1) throw ParamError("ptrans_peak_flops: unroll must be >= 1");
    const double f = std::min(f_max, mem_ctrl_freq);
    return ModelPrediction{
        bench::kPtrans,
        "peak_flops",
        static_cast<double>(unroll) * f,
        "FLOP/s",
        {{"f_max", f_max}, {"mem_ctrl_freq", mem_ctrl_freq}, {"unroll", static_cast<double>(unroll)}},
    };
}

inline ModelPrediction ptrans_peak_flops(const BoardSpec& board, int unroll) {
    return ptrans_peak_flops(board.kernel_freq_for(bench::kPtrans), board.mem_ctrl_freq, unroll);
}

// --- GEMM -------------------------------------------------------------------

/// Peak FLOP/s of the register-blocked matrix multiply: 2*b^3 multiply-add
/// operations initiated per cycle. Compute bound, so the kernel clock is not
/// capped by the memory controller.
inline ModelPrediction gemm_peak(double f_max, int gemm_block) {
    if (gemm_block < 1) throw ParamError("gemm_peak: gemm_block must be >= 1");
    const double ops_per_cycle = 2.0 * gemm_block * gemm_block * gemm_block;
    return ModelPrediction{
        bench::kGemm,
        "peak_flops",
        ops_per_cycle * f_max,
        "FLOP/s",
        {{"f_max", f_max}, {"gemm_block", static_cast<double>(gemm_block)}},
    };
}

// --- FFT --------------------------------------------------------------------

/// Peak FLOP/s of the batched FFT kernel: values_per_cycle values enter per
/// clock, each passing mults_per_value complex multiplications of
/// flops_per_mult floating-point operations. Memory bound, clock capped.
inline ModelPrediction fft_peak(double f_max, double mem_ctrl_freq, int values_per_cycle = 8,
                                int mults_per_value = 12, int flops_per_mult = 5) {
    if (values_per_cycle < 1 || mults_per_value < 1 || flops_per_mult < 1) {
        throw ParamError("fft_peak: all counts must be >= 1");
    }
    const double f = std::min(f_max, mem_ctrl_freq);
    const double ops = static_cast<double>(values_per_cycle) * mults_per_value * flops_per_mult;
    return ModelPrediction{
        bench::kFft,
        "peak_flops",
        ops * f,
        "FLOP/s",
        {{"f_max", f_max},
         {"mem_ctrl_freq", mem_ctrl_freq},
         {"values_per_cycle", static_cast<double>(values_per_cycle)},
         {"mults_per_value", static_cast<double>(mults_per_value)},
         {"flops_per_mult", static_cast<double>(flops_per_mult)}},
    };
}

inline ModelPrediction fft_peak(const BoardSpec& board, int values_per_cycle = 8,
                                int mults_per_value = 12, int flops_per_mult = 5) {
    return fft_peak(board.kernel_freq_for(bench::kFft), board.mem_ctrl_freq, values_per_cycle,
                    mults_per_value, flops_per_mult);
}

// --- b_eff ------------------------------------------------------------------

inline constexpr int kBeffMessageSizes = 21; // L = 2^0 .. 2^20 bytes

/// Achievable bandwidth for one message of L bytes over c channels of
/// c_width bytes: serialization takes ceil(L/(c*c_width)) cycles at c_freq,
/// plus the constant channel latency.
inline double beff_message_bandwidth(double message_bytes, int channels, double channel_width,
                                     double channel_freq, double channel_latency) {
    if (message_bytes <= 0 || channels < 1 || channel_width <= 0 || channel_freq <= 0 ||
        channel_latency < 0) {
        throw ParamError("beff_message_bandwidth: all inputs must be positive");
    }
    const double cycles = std::ceil(message_bytes / (channels * channel_width));
    return message_bytes / (cycles / channel_freq + channel_latency);
}

/// Mean of the 21 per-size bandwidths.
inline double beff_effective(std::span<const double> per_size_bandwidths) {
    if (per_size_bandwidths.size() != kBeffMessageSizes) {
        throw ParamError("beff_effective: expected exactly 21 per-size bandwidths");
    }
    double sum = 0.0;
    for (double b : per_size_bandwidths) sum += b;
    return sum / kBeffMessageSizes;
}

struct BeffModel {
    std::array<double, kBeffMessageSizes> per_size{}; // b_L for L = 2^0..2^20
    double effective = 0.0;                           // bytes/second
};

/// Evaluates the per-message model over all 21 message sizes.
inline BeffModel beff_model(int channels, double channel_width, double channel_freq,
                            double channel_latency) {
    BeffModel m;
    for (int k = 0; k < kBeffMessageSizes; ++k) {
        m.per_size[static_cast<std::size_t>(k)] = beff_message_bandwidth(
            static_cast<double>(std::uint64_t{1} << k), channels, channel_width, channel_freq,
            channel_latency);
    }
    m.effective = beff_effective(m.per_size);
    return m;
}

// --- FLOP counts and efficiency ----------------------------------------------

enum class FlopKind { Ptrans, Fft, Gemm, HplFactor, HplSolve };

inline FlopKind flop_kind_from_name(std::string_view name) {
    if (name == "PTRANS") return FlopKind::Ptrans;
    if (name == "FFT") return FlopKind::Fft;
    if (name == "GEMM") return FlopKind::Gemm;
    if (name == "HPL-factor") return FlopKind::HplFactor;
    if (name == "HPL-solve") return FlopKind::HplSolve;
    throw ParamError("flop_count: unknown benchmark '" + std::string(name) + "'");
}

/// Floating-point operation count of one benchmark run of problem order n.
inline double flop_count(FlopKind kind, std::uint64_t n) {
    if (n < 1) throw ParamError("flop_count: n must be >= 1");
    const double dn = static_cast<double>(n);
    switch (kind) {
    case FlopKind::Ptrans: return dn * dn;
    case FlopKind::Fft: return 5.0 * dn * std::log2(dn);
    case FlopKind::Gemm: return 2.0 * dn * dn * dn;
    case FlopKind::HplFactor: return 2.0 / 3.0 * dn * dn * dn - 0.5 * dn * dn;
    case FlopKind::HplSolve: return 2.0 * dn * dn;
    }
    throw ParamError("flop_count: unknown kind");
}

inline double flop_count(std::string_view benchmark, std::uint64_t n) {
    return flop_count(flop_kind_from_name(benchmark), n);
}

/// measured / model.
inline double efficiency(double measured, double model) {
    if (model <= 0) throw ParamError("efficiency: model value must be positive");
    return measured / model;
}

} // namespace analytic
} // namespace hpccsim
