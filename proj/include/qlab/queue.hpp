#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/synth.hpp"
#include "qlab/trace.hpp"

namespace qlab {

struct QueueStats {
    double mean_q = 0.0;         // time-average queue length (packets / fluid units)
    double peak_q = 0.0;
    double busy_fraction = 0.0;  // fraction of [0,T] with the server busy
    double duration = 0.0;       // T, first arrival to last departure
    double offered_utilization = 0.0;
    double mean_q_bytes = 0.0;   // bytes-in-system variant (packet sim only)
};

// Piecewise-constant queue trajectory: (time, level after the event).
struct QueueTimeline {
    std::vector<std::pair<double, double>> points;
};

// Infinite-buffer FIFO, single server, work-conserving. A packet of size l
// occupies the server l/bandwidth seconds. Q counts packets in system
// including the one in service. mean_q is the exact event-driven integral
// over [first arrival, last departure]. Ties: departures before arrivals.
QueueStats simulate_packet_queue(const Trace& trace, double bandwidth,
                                 QueueTimeline* timeline = nullptr);

// Unit-rate fluid queue: rises at (rate_on - 1) during on, falls at rate 1
// during off with floor 0. Exact piecewise-linear integration.
QueueStats simulate_fluid_queue(const FluidProcess& fluid);

// Per-cycle prefix profile of the fluid queue, for convergence studies.
struct FluidPrefixProfile {
    std::vector<double> cum_area;      // integral of Q up to end of cycle i
    std::vector<double> cum_duration;  // elapsed time up to end of cycle i
    std::vector<double> cum_on;        // total on time up to end of cycle i
};
FluidPrefixProfile fluid_prefix_profile(const FluidProcess& fluid);

// Bandwidth making offered utilization equal the target:
// total_bytes / (target * duration).
double calibrate_bandwidth(const Trace& trace, double target_utilization);

void save_stats(const QueueStats& stats, const std::string& path);
void save_timeline(const QueueTimeline& timeline, const std::string& path);

}  // namespace qlab
