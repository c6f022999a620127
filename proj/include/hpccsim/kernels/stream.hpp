#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "hpccsim/kernels/types.hpp"

namespace hpccsim {

enum class StreamOp { Copy, Scale, Add, Triad };

inline const char* to_string(StreamOp op) {
    switch (op) {
    case StreamOp::Copy: return "Copy";
    case StreamOp::Scale: return "Scale";
    case StreamOp::Add: return "Add";
    case StreamOp::Triad: return "Triad";
    }
    return "?";
}

inline const std::vector<StreamOp>& stream_op_sequence() {
    static const std::vector<StreamOp> seq = {StreamOp::Copy, StreamOp::Scale, StreamOp::Add,
                                              StreamOp::Triad};
    return seq;
}

/// Executes one STREAM operation the way the device kernel does: the array
/// range is split evenly across the replicated kernels, and each kernel walks
/// its range in buffer_size chunks through a staging buffer (load-and-scale
/// loop, optional add loop, store loop).
///
///   Copy:  C = A      Scale: B = j*C
///   Add:   C = A + B  Triad: A = j*C + B
inline VectorSet stream_op(StreamOp op, VectorSet v, std::size_t buffer_size, int replications) {
    const std::size_t n = v.size();
    if (v.b.size() != n || v.c.size() != n) {
        throw ParamError("stream_op: arrays must have equal length");
    }
    if (buffer_size == 0 || replications < 1) {
        throw ParamError("stream_op: buffer_size and replications must be positive");
    }
    if (n % (buffer_size * static_cast<std::size_t>(replications)) != 0) {
        throw ParamError("stream_op: array length must be divisible by buffer_size * replications");
    }

    const float* in1 = nullptr;
    const float* in2 = nullptr;
    float* out = nullptr;
    float scale = 1.0f;
    switch (op) {
    case StreamOp::Copy: in1 = v.a.data(); out = v.c.data(); break;
    case StreamOp::Scale: in1 = v.c.data(); out = v.b.data(); scale = v.scalar; break;
    case StreamOp::Add: in1 = v.a.data(); in2 = v.b.data(); out = v.c.data(); break;
    case StreamOp::Triad: in1 = v.c.data(); in2 = v.b.data(); out = v.a.data(); scale = v.scalar; break;
    }

    std::vector<float> buffer(buffer_size);
    const std::size_t per_kernel = n / static_cast<std::size_t>(replications);
    for (int r = 0; r < replications; ++r) {
        const std::size_t base = static_cast<std::size_t>(r) * per_kernel;
        for (std::size_t i = 0; i < per_kernel; i += buffer_size) {
            for (std::size_t k = 0; k < buffer_size; ++k) {
                buffer[k] = scale * in1[base + i + k];
            }
            if (in2 != nullptr) {
                for (std::size_t k = 0; k < buffer_size; ++k) {
                    buffer[k] += in2[base + i + k];
                }
            }
            for (std::size_t k = 0; k < buffer_size; ++k) {
                out[base + i + k] = buffer[k];
            }
        }
    }
    return v;
}

/// Initial constants of the three arrays (the scale factor lives in the set).
struct StreamInit {
    float a0 = 0.0f;
    float b0 = 0.0f;
    float c0 = 0.0f;
};

/// Validates a constant-initialized vector set by replaying the operation
/// history on scalars and comparing every element. Residual is the largest
/// per-element relative error; with constant inputs all four operations are
/// exact in 32-bit floats, so the bound is the machine epsilon itself.
inline ValidationReport stream_validate(const VectorSet& v, const StreamInit& init,
                                        std::span<const StreamOp> history) {
    float ea = init.a0, eb = init.b0, ec = init.c0;
    for (StreamOp op : history) {
        switch (op) {
        case StreamOp::Copy: ec = ea; break;
        case StreamOp::Scale: eb = v.scalar * ec; break;
        case StreamOp::Add: ec = ea + eb; break;
        case StreamOp::Triad: ea = v.scalar * ec + eb; break;
        }
    }

    auto max_rel_error = [](std::span<const float> arr, float expected) {
        double worst = 0.0;
        for (float x : arr) {
            const double diff = std::abs(static_cast<double>(x) - expected);
            double err;
            if (expected != 0.0f) {
                err = diff / std::abs(static_cast<double>(expected));
            } else {
                err = (diff == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
            }
            if (err > worst) worst = err;
        }
        return worst;
    };

    ValidationReport report;
    report.norm_used = "max-relative";
    report.threshold = kFloatEpsilon;
    report.residual = std::max({max_rel_error(v.a, ea), max_rel_error(v.b, eb),
                                max_rel_error(v.c, ec)});
    report.passed = report.residual <= report.threshold;
    return report;
}

} // namespace hpccsim
