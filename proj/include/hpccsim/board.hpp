#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hpccsim/errors.hpp"

namespace hpccsim {

/// Canonical benchmark names used as keys in BoardSpec::kernel_freq,
/// in reference entries and in CLI arguments.
namespace bench {
inline constexpr const char* kStream = "STREAM";
inline constexpr const char* kRandomAccess = "RandomAccess";
inline constexpr const char* kBeff = "b_eff";
inline constexpr const char* kPtrans = "PTRANS";
inline constexpr const char* kFft = "FFT";
inline constexpr const char* kGemm = "GEMM";
inline constexpr const char* kLinpack = "LINPACK";

inline const std::vector<std::string>& all() {
    static const std::vector<std::string> names = {
        kStream, kRandomAccess, kBeff, kPtrans, kFft, kGemm, kLinpack};
    return names;
}
} // namespace bench

/// Static hardware and tool parameters of one FPGA board.
///
/// Units are base SI throughout: bytes, Hz, seconds, bytes/second.
/// The channel block describes the inter-FPGA network and is optional;
/// boards without external channels leave it unset.
struct BoardSpec {
    std::string name;

    // External memory system.
    int mem_banks = 0;
    double bank_bandwidth = 0.0;  // bytes/second per bank
    int mem_iface_width = 0;      // bytes per cycle per memory interface
    double mem_ctrl_freq = 0.0;   // Hz
    int mem_latency_cycles = 240; // global memory access latency

    // Inter-FPGA channels (absent on boards without an external network).
    struct Channels {
        int channels_total = 0;
        double channel_width = 0.0;   // bytes per cycle per channel
        double channel_freq = 0.0;    // Hz
        double channel_latency = 0.0; // seconds
        // Vendor-declared raw bandwidth per channel; checked against
        // width*freq when present.
        std::optional<double> channel_raw_bandwidth;
    };
    std::optional<Channels> channels;

    // Synthesized kernel frequency per benchmark, Hz.
    std::map<std::string, double> kernel_freq;

    bool has_kernel_freq(std::string_view benchmark) const {
        return kernel_freq.count(std::string(benchmark)) > 0;
    }

    double kernel_freq_for(std::string_view benchmark) const {
        auto it = kernel_freq.find(std::string(benchmark));
        if (it == kernel_freq.end()) {
            throw ConfigError("board '" + name + "' has no kernel_freq entry for benchmark '" +
                              std::string(benchmark) + "'");
        }
        return it->second;
    }
};

/// Per-benchmark build parameters mirroring the suite's synthesis options.
struct TuningConfig {
    int block_size = 512;         // local-memory matrix block (PTRANS/GEMM)
    int gemm_block = 8;           // register block of the GEMM kernel
    int global_mem_unroll = 16;   // LSU unrolling factor
    int num_replications = 4;     // kernel copies, one per memory bank
    int device_buffer_size = 4096; // values staged in local memory (STREAM)
    int log_fft_size = 12;        // log2 of the FFT size, at most 12
    int channel_width_cfg = 32;   // configured channel width in bytes (b_eff)
    int local_mem_block_log = 5;  // log2 local-memory block (LINPACK)
    int register_block_log = 3;   // log2 register block (LINPACK)
};

inline void validate(const TuningConfig& t) {
    auto positive = [](int v, const char* field) {
        if (v <= 0) throw ConfigError(std::string("tuning field '") + field + "' must be positive");
    };
    positive(t.block_size, "block_size");
    positive(t.gemm_block, "gemm_block");
    positive(t.global_mem_unroll, "global_mem_unroll");
    positive(t.num_replications, "num_replications");
    positive(t.device_buffer_size, "device_buffer_size");
    positive(t.channel_width_cfg, "channel_width_cfg");
    if (t.log_fft_size <= 0 || t.log_fft_size > 12) {
        throw ConfigError("tuning field 'log_fft_size' must be in [1,12]");
    }
    if (t.local_mem_block_log < 0 || t.register_block_log < 0) {
        throw ConfigError("tuning fields 'local_mem_block_log'/'register_block_log' must be >= 0");
    }
    // Staged loads/stores must cover the buffer evenly.
    if (t.device_buffer_size % t.global_mem_unroll != 0 && t.device_buffer_size != 1) {
        throw ConfigError("tuning field 'device_buffer_size' must be a multiple of global_mem_unroll");
    }
}

inline void validate(const BoardSpec& b) {
    auto fail = [&](const std::string& field, const std::string& why) {
        throw ConfigError("board '" + b.name + "': field '" + field + "' " + why);
    };
    if (b.name.empty()) throw ConfigError("board: field 'name' must be non-empty");
    if (b.mem_banks <= 0) fail("mem_banks", "must be positive");
    if (b.bank_bandwidth <= 0) fail("bank_bandwidth", "must be positive");
    if (b.mem_iface_width <= 0) fail("mem_iface_width", "must be positive");
    if (b.mem_ctrl_freq <= 0) fail("mem_ctrl_freq", "must be positive");
    if (b.mem_latency_cycles <= 0) fail("mem_latency_cycles", "must be positive");
    if (b.channels) {
        const auto& c = *b.channels;
        if (c.channels_total <= 0) fail("channels_total", "must be positive");
        if (c.channel_width <= 0) fail("channel_width", "must be positive");
        if (c.channel_freq <= 0) fail("channel_freq", "must be positive");
        if (c.channel_latency <= 0) fail("channel_latency", "must be positive");
        if (c.channel_raw_bandwidth) {
            if (*c.channel_raw_bandwidth <= 0) fail("channel_raw_bandwidth", "must be positive");
            if (c.channel_width * c.channel_freq > *c.channel_raw_bandwidth * (1 + 1e-12)) {
                fail("channel_width", "times channel_freq exceeds channel_raw_bandwidth");
            }
        }
    }
    for (const auto& [name, f] : b.kernel_freq) {
        if (f <= 0) fail("kernel_freq." + name, "must be positive");
    }
}

// --- JSON board files -------------------------------------------------------
//
// A board file is a single self-describing JSON object whose keys match the
// BoardSpec field names (see docs/board_schema.md). Unknown keys are rejected.

inline nlohmann::ordered_json board_to_json(const BoardSpec& b) {
    nlohmann::ordered_json j;
    j["name"] = b.name;
    j["mem_banks"] = b.mem_banks;
    j["bank_bandwidth"] = b.bank_bandwidth;
    j["mem_iface_width"] = b.mem_iface_width;
    j["mem_ctrl_freq"] = b.mem_ctrl_freq;
    j["mem_latency_cycles"] = b.mem_latency_cycles;
    if (b.channels) {
        j["channels_total"] = b.channels->channels_total;
        j["channel_width"] = b.channels->channel_width;
        j["channel_freq"] = b.channels->channel_freq;
        j["channel_latency"] = b.channels->channel_latency;
        if (b.channels->channel_raw_bandwidth) {
            j["channel_raw_bandwidth"] = *b.channels->channel_raw_bandwidth;
        }
    }
    j["kernel_freq"] = nlohmann::ordered_json::object();
    for (const auto& [name, f] : b.kernel_freq) j["kernel_freq"][name] = f;
    return j;
}

inline BoardSpec board_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("board file: top level must be a JSON object");

    static const std::vector<std::string> known = {
        "name", "mem_banks", "bank_bandwidth", "mem_iface_width", "mem_ctrl_freq",
        "mem_latency_cycles", "channels_total", "channel_width", "channel_freq",
        "channel_latency", "channel_raw_bandwidth", "kernel_freq"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
            throw ConfigError("board file: unknown field '" + it.key() + "'");
        }
    }

    auto require = [&](const char* key) -> const nlohmann::json& {
        auto it = j.find(key);
        if (it == j.end()) throw ConfigError(std::string("board file: missing field '") + key + "'");
        return *it;
    };
    auto number = [&](const nlohmann::json& v, const char* key) -> double {
        if (!v.is_number()) throw ConfigError(std::string("board file: field '") + key + "' must be a number");
        return v.get<double>();
    };
    auto integer = [&](const nlohmann::json& v, const char* key) -> int {
        double d = number(v, key);
        int i = static_cast<int>(d);
        if (static_cast<double>(i) != d) {
            throw ConfigError(std::string("board file: field '") + key + "' must be an integer");
        }
        return i;
    };

    BoardSpec b;
    const auto& name = require("name");
    if (!name.is_string()) throw ConfigError("board file: field 'name' must be a string");
    b.name = name.get<std::string>();
    b.mem_banks = integer(require("mem_banks"), "mem_banks");
    b.bank_bandwidth = number(require("bank_bandwidth"), "bank_bandwidth");
    b.mem_iface_width = integer(require("mem_iface_width"), "mem_iface_width");
    b.mem_ctrl_freq = number(require("mem_ctrl_freq"), "mem_ctrl_freq");
    if (j.contains("mem_latency_cycles")) {
        b.mem_latency_cycles = integer(j.at("mem_latency_cycles"), "mem_latency_cycles");
    }

    // The channel block is all-or-nothing.
    const bool any_channel = j.contains("channels_total") || j.contains("channel_width") ||
                             j.contains("channel_freq") || j.contains("channel_latency");
    if (any_channel) {
        BoardSpec::Channels c;
        c.channels_total = integer(require("channels_total"), "channels_total");
        c.channel_width = number(require("channel_width"), "channel_width");
        c.channel_freq = number(require("channel_freq"), "channel_freq");
        c.channel_latency = number(require("channel_latency"), "channel_latency");
        if (j.contains("channel_raw_bandwidth")) {
            c.channel_raw_bandwidth = number(j.at("channel_raw_bandwidth"), "channel_raw_bandwidth");
        }
        b.channels = c;
    } else if (j.contains("channel_raw_bandwidth")) {
        throw ConfigError("board file: 'channel_raw_bandwidth' given without a channel block");
    }

    const auto& kf = require("kernel_freq");
    if (!kf.is_object()) throw ConfigError("board file: field 'kernel_freq' must be an object");
    for (auto it = kf.begin(); it != kf.end(); ++it) {
        b.kernel_freq[it.key()] = number(it.value(), ("kernel_freq." + it.key()).c_str());
    }

    validate(b);
    return b;
}

inline BoardSpec load_board_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("board file: cannot open '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("board file '" + path.string() + "': " + e.what());
    }
    return board_from_json(j);
}

inline void save_board_spec(const BoardSpec& b, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("board file: cannot write '" + path.string() + "'");
    out << board_to_json(b).dump(2) << "\n";
}

// --- Built-in boards --------------------------------------------------------

namespace detail {

inline BoardSpec make_520n() {
    BoardSpec b;
    b.name = "520N";
    b.mem_banks = 4;
    b.bank_bandwidth = 19.2e9;
    b.mem_iface_width = 64;
    b.mem_ctrl_freq = 300e6;
    b.mem_latency_cycles = 240;
    BoardSpec::Channels c;
    c.channels_total = 4;
    c.channel_width = 32; // 256 bit
    c.channel_freq = 156.25e6;
    c.channel_latency = 520e-9;
    c.channel_raw_bandwidth = 5e9; // 40 Gbit/s links
    b.channels = c;
    b.kernel_freq = {
        {bench::kStream, 316.67e6}, {bench::kRandomAccess, 329.17e6},
        {bench::kBeff, 286.67e6},   {bench::kPtrans, 350.00e6},
        {bench::kFft, 366.67e6},    {bench::kGemm, 320.84e6},
        {bench::kLinpack, 166.25e6},
    };
    return b;
}

inline BoardSpec make_u280_ddr() {
    BoardSpec b;
    b.name = "U280-DDR";
    b.mem_banks = 2;
    b.bank_bandwidth = 19.2e9;
    b.mem_iface_width = 64;
    b.mem_ctrl_freq = 300e6;
    b.mem_latency_cycles = 240;
    b.kernel_freq = {
        {bench::kStream, 300.00e6},
        {bench::kRandomAccess, 446.00e6},
        {bench::kPtrans, 300.00e6},
        {bench::kGemm, 250.00e6},
    };
    return b;
}

inline BoardSpec make_u280_hbm2() {
    BoardSpec b;
    b.name = "U280-HBM2";
    // Only the 460 GB/s aggregate is published; split evenly across the
    // 32 banks. A pseudo-channel is modeled as 32 bytes at 450 MHz.
    b.mem_banks = 32;
    b.bank_bandwidth = 460e9 / 32;
    b.mem_iface_width = 32;
    b.mem_ctrl_freq = 450e6;
    b.mem_latency_cycles = 240;
    b.kernel_freq = {
        {bench::kStream, 370.00e6},
        {bench::kRandomAccess, 450.00e6},
    };
    return b;
}

inline BoardSpec make_pac_svm() {
    BoardSpec b;
    b.name = "PAC-SVM";
    // SVM path through PCIe: modeled as a single bank whose bandwidth is the
    // measured PCIe-path ceiling. The path has no 300 MHz controller bound,
    // so mem_ctrl_freq is set above every synthesized kernel frequency and
    // the bank bandwidth term binds instead.
    b.mem_banks = 1;
    b.bank_bandwidth = 20.15e9;
    b.mem_iface_width = 64;
    b.mem_ctrl_freq = 350e6;
    b.mem_latency_cycles = 240;
    b.kernel_freq = {
        {bench::kStream, 346.00e6}, {bench::kRandomAccess, 322.00e6},
        {bench::kPtrans, 302.00e6}, {bench::kFft, 327.00e6},
        {bench::kGemm, 296.00e6},   {bench::kLinpack, 276.00e6},
    };
    return b;
}

} // namespace detail

inline const std::vector<BoardSpec>& builtin_boards() {
    static const std::vector<BoardSpec> boards = {
        detail::make_520n(),
        detail::make_u280_ddr(),
        detail::make_u280_hbm2(),
        detail::make_pac_svm(),
    };
    return boards;
}

inline const BoardSpec& builtin_board(std::string_view name) {
    for (const auto& b : builtin_boards()) {
        if (b.name == name) return b;
    }
    throw ConfigError("unknown built-in board '" + std::string(name) + "'");
}

/// Resolves a --board argument: a built-in name or a path to a board file.
inline BoardSpec resolve_board(const std::string& name_or_path) {
    for (const auto& b : builtin_boards()) {
        if (b.name == name_or_path) return b;
    }
    if (std::filesystem::exists(name_or_path)) return load_board_spec(name_or_path);
    throw ConfigError("'" + name_or_path + "' is neither a built-in board nor an existing file");
}

} // namespace hpccsim
