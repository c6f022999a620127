#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "hpccsim/analytic.hpp"
#include "hpccsim/board.hpp"
#include "hpccsim/errors.hpp"

namespace hpccsim {

enum class DuplexMode { half, full };

inline const char* to_string(DuplexMode m) { return m == DuplexMode::half ? "half" : "full"; }

/// Circuit-switched ring: node i is linked to its neighbors (i +- 1) mod N,
/// each link bundling channels_per_link board channels.
struct RingTopology {
    int node_count = 2;
    int links_per_node = 2;
    int channels_per_link = 2;
    double channel_width = 32;     // bytes
    double channel_freq = 156.25e6; // Hz
    double channel_latency = 520e-9; // seconds
};

inline void validate(const RingTopology& t) {
    if (t.node_count < 2) throw ConfigError("ring topology: node_count must be >= 2");
    if (t.links_per_node != 2) throw ConfigError("ring topology: a ring has exactly 2 links per node");
    if (t.channels_per_link < 1 || t.channel_width <= 0 || t.channel_freq <= 0 ||
        t.channel_latency < 0) {
        throw ConfigError("ring topology: channel parameters must be positive");
    }
}

/// Builds the ring a board's channels support: the channels are split evenly
/// between the two neighbor links.
inline RingTopology ring_from_board(const BoardSpec& board, int node_count) {
    if (!board.channels) {
        throw ConfigError("board '" + board.name + "' has no external channels");
    }
    const auto& c = *board.channels;
    RingTopology t;
    t.node_count = node_count;
    t.links_per_node = 2;
    t.channels_per_link = c.channels_total / t.links_per_node;
    if (t.channels_per_link * t.links_per_node > c.channels_total) {
        throw ConfigError("board '" + board.name + "': not enough channels for two links");
    }
    t.channel_width = c.channel_width;
    t.channel_freq = c.channel_freq;
    t.channel_latency = c.channel_latency;
    validate(t);
    return t;
}

/// One endpoint program of the exchange: the send kernel first sends then
/// receives, the recv kernel first receives then sends.
struct ExchangeKernel {
    enum class Role { send, recv };
    Role role = Role::send;
    DuplexMode mode = DuplexMode::full;
    std::uint64_t message_size = 1; // bytes
    int repetitions = 1;
};

struct ExchangeStats {
    double elapsed_seconds = 0.0;
    std::vector<double> node_busy_seconds;
    std::uint64_t messages_sent = 0;
    std::uint64_t messages_delivered = 0;
    std::uint64_t bytes_sent = 0;
    std::uint64_t bytes_delivered = 0;
    std::size_t event_count = 0;
    std::vector<double> event_times; // filled only when tracing
};

namespace detail {

enum class EventKind { serialize_done, delivery, kernel_ready };

struct Event {
    double time;
    std::uint64_t seq; // insertion order breaks ties
    EventKind kind;
    int link;
    int direction; // 0: send-role -> recv-role, 1: reply
};

struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time) return a.time > b.time;
        return a.seq > b.seq;
    }
};

} // namespace detail

/// Simulates `repetitions` message exchanges of L bytes on every ring link.
///
/// Serializing a message occupies the link's channels for
/// ceil(L / (channels * width)) cycles; delivery completes channel_latency
/// after serialization ends. In full-duplex mode the two endpoints of a link
/// serialize simultaneously; in half-duplex mode the recv kernel only starts
/// its reply after the send kernel's message arrived.
inline ExchangeStats run_exchange(const RingTopology& topo, std::uint64_t message_bytes,
                                  int repetitions, DuplexMode mode, bool record_trace = false) {
    validate(topo);
    if (message_bytes < 1) throw ParamError("run_exchange: message size must be >= 1 byte");
    if (repetitions < 1) throw ParamError("run_exchange: repetitions must be >= 1");

    const int links = topo.node_count; // link l connects node l and node (l+1) % N
    const double cycles =
        std::ceil(static_cast<double>(message_bytes) / (topo.channels_per_link * topo.channel_width));
    const double serialize_time = cycles / topo.channel_freq;

    struct LinkState {
        int reps_left = 0;
        bool delivered0 = false; // full duplex: both directions of current round
        bool delivered1 = false;
    };
    std::vector<LinkState> link_state(static_cast<std::size_t>(links));

    std::priority_queue<detail::Event, std::vector<detail::Event>, detail::EventAfter> queue;
    std::uint64_t seq = 0;
    auto push = [&](double time, detail::EventKind kind, int link, int direction) {
        queue.push(detail::Event{time, seq++, kind, link, direction});
    };

    ExchangeStats stats;
    stats.node_busy_seconds.assign(static_cast<std::size_t>(topo.node_count), 0.0);

    auto sender_node = [&](int link, int direction) {
        // direction 0 originates at node `link`, the reply at its neighbor
        return direction == 0 ? link : (link + 1) % topo.node_count;
    };
    auto receiver_node = [&](int link, int direction) {
        return direction == 0 ? (link + 1) % topo.node_count : link;
    };

    auto begin_serialize = [&](double now, int link, int direction) {
        stats.messages_sent += 1;
        stats.bytes_sent += message_bytes;
        stats.node_busy_seconds[static_cast<std::size_t>(sender_node(link, direction))] =
            std::max(stats.node_busy_seconds[static_cast<std::size_t>(sender_node(link, direction))],
                     now + serialize_time);
        push(now + serialize_time, detail::EventKind::serialize_done, link, direction);
    };

    // round zero starts at t = 0 on every link
    for (int l = 0; l < links; ++l) {
        link_state[static_cast<std::size_t>(l)].reps_left = repetitions;
        push(0.0, detail::EventKind::kernel_ready, l, 0);
    }

    double now = 0.0;
    while (!queue.empty()) {
        const detail::Event ev = queue.top();
        queue.pop();
        if (ev.time < now) {
            throw std::logic_error("netsim: event times must be non-decreasing");
        }
        now = ev.time;
        stats.event_count += 1;
        if (record_trace) stats.event_times.push_back(now);

        LinkState& st = link_state[static_cast<std::size_t>(ev.link)];
        switch (ev.kind) {
        case detail::EventKind::kernel_ready: {
            // a new exchange round begins
            st.delivered0 = st.delivered1 = false;
            begin_serialize(now, ev.link, 0);
            if (mode == DuplexMode::full) {
                begin_serialize(now, ev.link, 1);
            }
            break;
        }
        case detail::EventKind::serialize_done: {
            push(now + topo.channel_latency, detail::EventKind::delivery, ev.link, ev.direction);
            break;
        }
        case detail::EventKind::delivery: {
            stats.messages_delivered += 1;
            stats.bytes_delivered += message_bytes;
            const int node = receiver_node(ev.link, ev.direction);
            stats.node_busy_seconds[static_cast<std::size_t>(node)] =
                std::max(stats.node_busy_seconds[static_cast<std::size_t>(node)], now);

            if (mode == DuplexMode::half) {
                if (ev.direction == 0) {
                    // recv kernel got the message, replies now
                    begin_serialize(now, ev.link, 1);
                } else {
                    st.reps_left -= 1;
                    if (st.reps_left > 0) push(now, detail::EventKind::kernel_ready, ev.link, 0);
                }
            } else {
                (ev.direction == 0 ? st.delivered0 : st.delivered1) = true;
                if (st.delivered0 && st.delivered1) {
                    st.reps_left -= 1;
                    if (st.reps_left > 0) push(now, detail::EventKind::kernel_ready, ev.link, 0);
                }
            }
            break;
        }
        }
    }

    stats.elapsed_seconds = now;
    return stats;
}

struct BeffMeasurement {
    std::array<double, analytic::kBeffMessageSizes> per_size_bandwidth{}; // per link direction
    double per_link_beff = 0.0;
    std::vector<double> per_node_beff;
    double aggregate_beff = 0.0;
};

/// Runs the exchange for L = 2^0..2^20 bytes, computes the per-direction
/// bandwidth of a link per size, averages over the 21 sizes and accumulates
/// the per-node and aggregate effective bandwidth.
inline BeffMeasurement measure_beff(const RingTopology& topo, int repetitions, DuplexMode mode) {
    validate(topo);
    BeffMeasurement m;
    for (int k = 0; k < analytic::kBeffMessageSizes; ++k) {
        const std::uint64_t bytes = std::uint64_t{1} << k;
        const ExchangeStats stats = run_exchange(topo, bytes, repetitions, mode);
        const double per_direction_bytes = static_cast<double>(bytes) * repetitions;
        m.per_size_bandwidth[static_cast<std::size_t>(k)] =
            per_direction_bytes / stats.elapsed_seconds;
    }
    m.per_link_beff = analytic::beff_effective(m.per_size_bandwidth);
    m.per_node_beff.assign(static_cast<std::size_t>(topo.node_count),
                           topo.links_per_node * m.per_link_beff);
    for (double v : m.per_node_beff) m.aggregate_beff += v;
    return m;
}

} // namespace hpccsim
