#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qlab {

struct PacketRecord {
    double t = 0.0;          // arrival time, seconds
    std::int64_t size = 0;   // bytes

    bool operator==(const PacketRecord&) const = default;
};

// Ordered packet arrivals. Timestamps are non-decreasing; equal timestamps
// are allowed and kept in input order.
struct Trace {
    std::vector<PacketRecord> packets;
    std::string label;

    std::size_t size() const { return packets.size(); }
    bool empty() const { return packets.empty(); }
};

struct TraceSummary {
    std::size_t n_packets = 0;
    double duration = 0.0;        // t_last - t_first
    std::int64_t total_bytes = 0;
    double mean_rate = 0.0;       // bytes/s; NaN when duration == 0
};

// Reads the trace-csv format: header "time_s,size_bytes", one packet per
// row. Throws std::runtime_error with a line number on malformed rows,
// decreasing timestamps, or an empty file.
Trace load_trace(const std::string& path);

// Writes trace-csv. Times are printed with enough digits to round-trip.
void save_trace(const Trace& trace, const std::string& path);

TraceSummary summarize_trace(const Trace& trace);

// Contiguous sub-trace of n packets starting at start_index, re-based so
// the first packet is at t = 0.
Trace take_window(const Trace& trace, std::size_t start_index, std::size_t n);

// Throws unless timestamps are non-decreasing and the trace is non-empty.
void validate_trace(const Trace& trace);

}  // namespace qlab
