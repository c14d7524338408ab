#include "qlab/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qlab {

void OnOffParams::validate() const {
    if (!(a > 1.0)) throw std::invalid_argument("peak ratio a must exceed 1");
    if (!(alpha > 1.0))
        throw std::invalid_argument("alpha must exceed 1 (mean on length diverges)");
    if (!(x_m > 0.0)) throw std::invalid_argument("Pareto scale x_m must be positive");
    if (!(lambda_target > 0.0 && lambda_target < 1.0))
        throw std::invalid_argument("lambda_target must lie in (0,1)");
}

void PacketizationParams::validate() const {
    if (packet_size < 1) throw std::invalid_argument("packet_size must be >= 1");
    if (!(server_rate_ref > 0.0))
        throw std::invalid_argument("server_rate_ref must be positive");
}

double sample_pareto(double alpha, double x_m, double u) {
    if (!(alpha > 0.0) || !(x_m > 0.0))
        throw std::invalid_argument("pareto parameters must be positive");
    if (!(u > 0.0 && u <= 1.0))
        throw std::invalid_argument("pareto variate u must lie in (0,1]");
    return x_m * std::pow(u, -1.0 / alpha);
}

FluidProcess gen_onoff_fluid(const OnOffParams& params, std::size_t n_cycles,
                             std::uint64_t seed) {
    params.validate();
    if (n_cycles < 1) throw std::invalid_argument("n_cycles must be >= 1");

    const double off_factor = params.a / params.lambda_target - 1.0;
    const double mean_off = params.mean_on() * off_factor;

    Rng rng(seed);
    FluidProcess fluid;
    fluid.rate_on = params.a;
    fluid.cycles.reserve(n_cycles);
    for (std::size_t i = 0; i < n_cycles; ++i) {
        FluidCycle c;
        c.on = sample_pareto(params.alpha, params.x_m, uniform01(rng));
        c.off = params.off_rule == OffRule::DeterministicReordered
                    ? c.on * off_factor
                    : exponential(rng, mean_off);
        fluid.cycles.push_back(c);
    }
    return fluid;
}

FluidProcess gen_bounded_q_fluid(const std::vector<double>& on_lengths,
                                 double a, double q) {
    if (!(a > 1.0)) throw std::invalid_argument("peak ratio a must exceed 1");
    if (!(q > 0.0)) throw std::invalid_argument("queue bound q must be positive");

    FluidProcess fluid;
    fluid.rate_on = a;
    fluid.cycles.reserve(on_lengths.size());
    for (double x : on_lengths) {
        if (!(x > 0.0)) throw std::invalid_argument("on lengths must be positive");
        // long enough that the cycle drains and its mean queue is at most q
        double off = std::max((a - 1.0) * x, (a - 1.0) * a * x * x / (2.0 * q) - x);
        fluid.cycles.push_back({x, off});
    }
    return fluid;
}

double lower_bound_estimate(const std::vector<double>& on_lengths, double a,
                            double lambda) {
    if (on_lengths.empty()) throw std::invalid_argument("no on lengths given");
    if (!(a > 1.0)) throw std::invalid_argument("peak ratio a must exceed 1");
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("lambda must lie in (0,1)");

    double sum_x = 0.0, sum_x2 = 0.0;
    for (double x : on_lengths) {
        sum_x += x;
        sum_x2 += x * x;
    }
    // triangle areas (a-1)a X^2/2 over cycle lengths X a/lambda
    return lambda * (a - 1.0) * sum_x2 / (2.0 * sum_x);
}

Trace packetize(const FluidProcess& fluid, const PacketizationParams& pp) {
    pp.validate();
    Trace trace;
    trace.label = "packetized";
    double t = 0.0;
    for (const auto& c : fluid.cycles) {
        double burst_bytes = c.on * fluid.rate_on * pp.server_rate_ref;
        auto n = static_cast<std::int64_t>(burst_bytes / static_cast<double>(pp.packet_size));
        if (n < 1) n = 1;
        const double spacing = c.on / static_cast<double>(n);
        for (std::int64_t k = 0; k < n; ++k)
            trace.packets.push_back({t + static_cast<double>(k) * spacing, pp.packet_size});
        t += c.on + c.off;
    }
    return trace;
}

Trace gen_onoff_trace(const OnOffParams& params, const PacketizationParams& pp,
                      std::size_t n_packets, std::uint64_t seed) {
    params.validate();
    pp.validate();
    if (n_packets < 1) throw std::invalid_argument("n_packets must be >= 1");

    const double off_factor = params.a / params.lambda_target - 1.0;
    const double mean_off = params.mean_on() * off_factor;

    Rng rng(seed);
    Trace trace;
    trace.label = "onoff";
    trace.packets.reserve(n_packets);
    double t = 0.0;
    while (trace.packets.size() < n_packets) {
        double on = sample_pareto(params.alpha, params.x_m, uniform01(rng));
        double off = params.off_rule == OffRule::DeterministicReordered
                         ? on * off_factor
                         : exponential(rng, mean_off);
        double burst_bytes = on * params.a * pp.server_rate_ref;
        auto n = static_cast<std::int64_t>(burst_bytes / static_cast<double>(pp.packet_size));
        if (n < 1) n = 1;
        const double spacing = on / static_cast<double>(n);
        for (std::int64_t k = 0; k < n && trace.packets.size() < n_packets; ++k)
            trace.packets.push_back({t + static_cast<double>(k) * spacing, pp.packet_size});
        t += on + off;
    }
    const double t0 = trace.packets.front().t;
    for (auto& p : trace.packets) p.t -= t0;
    return trace;
}

double fit_tail_exponent(std::vector<double> samples, double tail_fraction) {
    if (samples.size() < 100)
        throw std::invalid_argument("need at least 100 samples for a tail fit");
    if (!(tail_fraction > 0.0 && tail_fraction <= 0.5))
        throw std::invalid_argument("tail_fraction must lie in (0, 0.5]");

    std::sort(samples.begin(), samples.end());
    const auto n = samples.size();
    auto k = static_cast<std::size_t>(tail_fraction * static_cast<double>(n));
    if (k < 2) k = 2;

    // regress log CCDF on log x over the top k order statistics,
    // skipping the maximum where the empirical CCDF is zero
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = n - k; i + 1 < n; ++i) {
        if (!(samples[i] > 0.0))
            throw std::invalid_argument("tail fit requires positive samples");
        double lx = std::log(samples[i]);
        double ly = std::log(static_cast<double>(n - 1 - i) / static_cast<double>(n));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    if (!(denom > 1e-12 * sxx))
        throw std::invalid_argument("degenerate tail: log-x variance is zero");
    const double slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
    return -slope;
}

void save_fluid(const FluidProcess& fluid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write fluid file: " + path);
    out << "on_s,off_s\n";
    char buf[96];
    for (const auto& c : fluid.cycles) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", c.on, c.off);
        out << buf << '\n';
    }
}

}  // namespace qlab
