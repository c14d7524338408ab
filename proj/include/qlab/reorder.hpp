#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/trace.hpp"

namespace qlab {

struct BlockShufflePlan {
    std::size_t blocksize = 1;
    std::uint64_t seed = 0;
    std::size_t n_blocks = 0;
    std::vector<std::size_t> permutation;  // output position -> source block
};

BlockShufflePlan make_shuffle_plan(std::size_t n_packets, std::size_t blocksize,
                                   std::uint64_t seed);

// Correlation-destruction surrogate: the trace becomes (delta, size) pairs
// (first delta 0), consecutive runs of B pairs form blocks, blocks are
// permuted uniformly at random, and timestamps are rebuilt cumulatively
// from 0. The synthetic leading zero swaps back to the front so the delta
// multiset is preserved exactly. No correlation survives beyond B packets.
Trace block_shuffle(const Trace& trace, std::size_t blocksize,
                    std::uint64_t seed);

Trace apply_shuffle_plan(const Trace& trace, const BlockShufflePlan& plan);

// Sample autocovariance of per-bin packet counts, lags 0..max_lag.
std::vector<double> autocovariance_check(const Trace& trace, double bin,
                                         std::size_t max_lag);

void save_shuffle_plan(const BlockShufflePlan& plan, const std::string& path);

}  // namespace qlab
