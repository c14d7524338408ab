#pragma once

#include <cstdint>
#include <vector>

#include "qlab/rng.hpp"
#include "qlab/trace.hpp"

namespace qlab {

enum class OffRule {
    IidExponential,         // stationary off periods, mean E[X]*(a/lambda - 1)
    DeterministicReordered  // off_i = on_i * (a/lambda - 1) exactly
};

// Single heavy-tailed on/off source feeding a unit-rate server.
struct OnOffParams {
    double a = 2.0;              // peak-to-service rate ratio, > 1
    double alpha = 1.5;          // Pareto tail exponent, > 1
    double x_m = 1.0;            // Pareto scale, seconds
    double lambda_target = 0.5;  // long-run utilization, in (0,1)
    OffRule off_rule = OffRule::IidExponential;

    void validate() const;
    double mean_on() const { return alpha * x_m / (alpha - 1.0); }
};

struct FluidCycle {
    double on = 0.0;   // seconds, > 0
    double off = 0.0;  // seconds, >= 0
};

// Alternating on/off process; arrival rate is rate_on during on, 0 during off.
struct FluidProcess {
    std::vector<FluidCycle> cycles;
    double rate_on = 2.0;
};

struct PacketizationParams {
    std::int64_t packet_size = 1000;   // bytes, constant
    double server_rate_ref = 1000.0;   // bytes/s mapping the unit-rate server

    void validate() const;
};

// Inverse-CDF Pareto draw: x_m * u^(-1/alpha), so P(X > x) = (x/x_m)^-alpha.
double sample_pareto(double alpha, double x_m, double u);

FluidProcess gen_onoff_fluid(const OnOffParams& params, std::size_t n_cycles,
                             std::uint64_t seed);

// Bounded-mean-queue construction: off_i = max((a-1)X, (a-1)aX^2/(2q) - X).
// Every cycle drains; the time-average queue never exceeds q.
FluidProcess gen_bounded_q_fluid(const std::vector<double>& on_lengths,
                                 double a, double q);

// Exact time-average queue of the reordered process built from the given
// on lengths: lambda*(a-1)*sum(X^2) / (2*sum(X)).
double lower_bound_estimate(const std::vector<double>& on_lengths, double a,
                            double lambda);

// Maps a fluid process onto constant-size packets: each on period of length
// L emits max(1, floor(L*a*rate/size)) uniformly spaced packets.
Trace packetize(const FluidProcess& fluid, const PacketizationParams& pp);

// Convenience: fluid generation + packetize, truncated to exactly n packets
// and re-based to t = 0.
Trace gen_onoff_trace(const OnOffParams& params, const PacketizationParams& pp,
                      std::size_t n_packets, std::uint64_t seed);

// Least-squares slope of log CCDF vs log x over the largest tail_fraction
// of the samples, negated. Estimates the tail exponent.
double fit_tail_exponent(std::vector<double> samples, double tail_fraction);

void save_fluid(const FluidProcess& fluid, const std::string& path);

}  // namespace qlab
