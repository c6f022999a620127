#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hpccsim/kernels/types.hpp"

namespace hpccsim {

/// The suite's 64-bit LFSR: a0 = 1, a' = (a << 1) ^ (a & msb ? 0x7 : 0).
class HpccRng {
public:
    std::uint64_t next() {
        state_ = (state_ << 1) ^ ((state_ & kMsb) ? kPoly : 0);
        return state_;
    }

private:
    static constexpr std::uint64_t kPoly = 0x0000000000000007ull;
    static constexpr std::uint64_t kMsb = 0x8000000000000000ull;
    std::uint64_t state_ = 1;
};

/// The first `count` values a1..ak of the update sequence.
inline std::vector<std::uint64_t> hpcc_random_sequence(std::size_t count) {
    std::vector<std::uint64_t> seq;
    seq.reserve(count);
    HpccRng rng;
    for (std::size_t i = 0; i < count; ++i) seq.push_back(rng.next());
    return seq;
}

/// Exact sequential update run: d[a mod n] ^= a for 4*n values a.
inline UpdateArray randomaccess_reference(UpdateArray d) {
    const std::size_t n = d.size();
    if (!is_power_of_two(n)) throw ParamError("randomaccess_reference: size must be a power of two");
    HpccRng rng;
    const std::uint64_t mask = n - 1;
    for (std::uint64_t t = 0; t < 4 * static_cast<std::uint64_t>(n); ++t) {
        const std::uint64_t a = rng.next();
        d.data[a & mask] ^= a;
    }
    return d;
}

/// Buffered update run as executed by the replicated bank kernels.
///
/// All kernels scan the same address stream in batches of buf_local; within
/// a batch every load happens before any store. A duplicate address inside
/// one batch therefore reads the stale value and the last store wins, which
/// is the mechanism behind the benchmark's tolerated update errors. The bank
/// kernels partition the address space disjointly, so their per-batch commit
/// order does not change the result.
inline UpdateArray randomaccess_run(UpdateArray d, int banks, std::size_t buf_local) {
    const std::size_t n = d.size();
    if (!is_power_of_two(n)) throw ParamError("randomaccess_run: size must be a power of two");
    if (banks < 1 || n % static_cast<std::size_t>(banks) != 0) {
        throw ParamError("randomaccess_run: banks must be >= 1 and divide the array size");
    }
    if (buf_local < 1) throw ParamError("randomaccess_run: buf_local must be >= 1");

    HpccRng rng;
    const std::uint64_t mask = n - 1;
    const std::uint64_t total = 4 * static_cast<std::uint64_t>(n);

    std::vector<std::uint64_t> batch_values(buf_local);
    std::vector<std::uint64_t> staged(buf_local);
    std::uint64_t done = 0;
    while (done < total) {
        const std::size_t batch = static_cast<std::size_t>(
            std::min<std::uint64_t>(buf_local, total - done));
        for (std::size_t k = 0; k < batch; ++k) batch_values[k] = rng.next();
        // load phase: stale values for the whole batch
        for (std::size_t k = 0; k < batch; ++k) {
            staged[k] = d.data[batch_values[k] & mask];
        }
        // store phase: last store to a duplicate address wins
        for (std::size_t k = 0; k < batch; ++k) {
            d.data[batch_values[k] & mask] = staged[k] ^ batch_values[k];
        }
        done += batch;
    }
    return d;
}

/// Error percentage between a kernel run and the exact reference:
/// 100 * mismatches / n, passing below 1%.
inline ValidationReport randomaccess_validate(const UpdateArray& d, const UpdateArray& d_ref) {
    if (d.size() != d_ref.size()) throw ParamError("randomaccess_validate: size mismatch");
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.data[i] != d_ref.data[i]) ++mismatches;
    }
    ValidationReport report;
    report.norm_used = "error-percentage";
    report.threshold = 1.0;
    report.residual = 100.0 * static_cast<double>(mismatches) / static_cast<double>(d.size());
    report.passed = report.residual < report.threshold;
    return report;
}

} // namespace hpccsim
