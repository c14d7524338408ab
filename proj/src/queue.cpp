#include "qlab/queue.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qlab {

QueueStats simulate_packet_queue(const Trace& trace, double bandwidth,
                                 QueueTimeline* timeline) {
    validate_trace(trace);
    if (!(bandwidth > 0.0)) throw std::invalid_argument("bandwidth must be positive");

    const auto& pkts = trace.packets;
    const auto n = pkts.size();

    // FIFO single server: departure i is max(arrival_i, departure_{i-1}) + l/b
    std::vector<double> dep(n);
    std::int64_t total_bytes = 0;
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double start = std::max(pkts[i].t, prev);
        prev = start + static_cast<double>(pkts[i].size) / bandwidth;
        dep[i] = prev;
        total_bytes += pkts[i].size;
    }

    const double t0 = pkts.front().t;
    const double t_end = dep.back();
    const double T = t_end - t0;

    // merge arrivals and departures; at ties departures go first
    double area = 0.0, area_bytes = 0.0;
    double q = 0.0, bytes_in = 0.0, peak = 0.0;
    double cur = t0;
    std::size_t ai = 0, di = 0;
    if (timeline) timeline->points.clear();
    while (di < n) {
        bool take_dep = ai >= n || dep[di] <= pkts[ai].t;
        double ev = take_dep ? dep[di] : pkts[ai].t;
        area += q * (ev - cur);
        area_bytes += bytes_in * (ev - cur);
        cur = ev;
        if (take_dep) {
            q -= 1.0;
            bytes_in -= static_cast<double>(pkts[di].size);
            ++di;
        } else {
            q += 1.0;
            bytes_in += static_cast<double>(pkts[ai].size);
            ++ai;
        }
        peak = std::max(peak, q);
        if (timeline) timeline->points.emplace_back(cur, q);
    }

    QueueStats s;
    s.duration = T;
    s.mean_q = T > 0 ? area / T : 1.0;
    s.mean_q_bytes = T > 0 ? area_bytes / T : static_cast<double>(total_bytes);
    s.peak_q = peak;
    // the server is busy for exactly total_bytes/b seconds in [t0, t_end]
    s.busy_fraction = T > 0 ? (static_cast<double>(total_bytes) / bandwidth) / T : 1.0;
    const double span = pkts.back().t - t0;
    s.offered_utilization = span > 0
                                ? static_cast<double>(total_bytes) / (bandwidth * span)
                                : s.busy_fraction;
    return s;
}

namespace {

struct FluidAccum {
    double q = 0.0;
    double area = 0.0;
    double busy = 0.0;
    double peak = 0.0;
    double elapsed = 0.0;
    double on_time = 0.0;

    void step(const FluidCycle& c, double rate_on) {
        // rise at (a-1) for the on period
        double q1 = q + (rate_on - 1.0) * c.on;
        area += 0.5 * (q + q1) * c.on;
        busy += c.on;
        on_time += c.on;
        peak = std::max(peak, q1);
        // fall at rate 1, floor 0
        if (q1 >= c.off) {
            area += 0.5 * (q1 + (q1 - c.off)) * c.off;
            busy += c.off;
            q = q1 - c.off;
        } else {
            area += 0.5 * q1 * q1;  // triangle down to zero
            busy += q1;
            q = 0.0;
        }
        elapsed += c.on + c.off;
    }
};

void check_fluid(const FluidProcess& fluid) {
    if (fluid.cycles.empty()) throw std::invalid_argument("fluid process is empty");
    if (!(fluid.rate_on > 1.0))
        throw std::invalid_argument("fluid rate_on must exceed 1");
    for (const auto& c : fluid.cycles) {
        if (!(c.on > 0.0)) throw std::invalid_argument("on periods must be positive");
        if (!(c.off >= 0.0)) throw std::invalid_argument("off periods must be non-negative");
    }
}

}  // namespace

QueueStats simulate_fluid_queue(const FluidProcess& fluid) {
    check_fluid(fluid);
    FluidAccum acc;
    double arrived = 0.0;
    for (const auto& c : fluid.cycles) {
        acc.step(c, fluid.rate_on);
        arrived += c.on * fluid.rate_on;
    }
    QueueStats s;
    s.duration = acc.elapsed;
    s.mean_q = acc.area / acc.elapsed;
    s.peak_q = acc.peak;
    s.busy_fraction = acc.busy / acc.elapsed;
    s.offered_utilization = arrived / acc.elapsed;  // unit server rate
    s.mean_q_bytes = s.mean_q;
    return s;
}

FluidPrefixProfile fluid_prefix_profile(const FluidProcess& fluid) {
    check_fluid(fluid);
    FluidPrefixProfile p;
    p.cum_area.reserve(fluid.cycles.size());
    p.cum_duration.reserve(fluid.cycles.size());
    p.cum_on.reserve(fluid.cycles.size());
    FluidAccum acc;
    for (const auto& c : fluid.cycles) {
        acc.step(c, fluid.rate_on);
        p.cum_area.push_back(acc.area);
        p.cum_duration.push_back(acc.elapsed);
        p.cum_on.push_back(acc.on_time);
    }
    return p;
}

double calibrate_bandwidth(const Trace& trace, double target_utilization) {
    if (!(target_utilization > 0.0 && target_utilization < 1.0))
        throw std::invalid_argument("target utilization must lie in (0,1)");
    TraceSummary s = summarize_trace(trace);
    if (!(s.duration > 0.0))
        throw std::invalid_argument("cannot calibrate on a zero-duration trace");
    return static_cast<double>(s.total_bytes) / (target_utilization * s.duration);
}

void save_stats(const QueueStats& stats, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write stats file: " + path);
    out << "mean_q,peak_q,busy_fraction,duration_s,offered_utilization\n";
    char buf[200];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g", stats.mean_q,
                  stats.peak_q, stats.busy_fraction, stats.duration,
                  stats.offered_utilization);
    out << buf << '\n';
}

void save_timeline(const QueueTimeline& timeline, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write timeline file: " + path);
    out << "time_s,queue_len\n";
    char buf[96];
    for (const auto& [t, q] : timeline.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", t, q);
        out << buf << '\n';
    }
}

}  // namespace qlab
