#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "crqa/time_series.hpp"

namespace crqa {

/// Parameters of the coupled two-agent event simulator.  Agent C emits
/// events spontaneously (p_c) or by repeating itself (p_cc); agent S
/// follows C's previous event with p_sc, emits spontaneously with p_s,
/// or repeats itself with p_ss.
struct DyadParams {
    double p_c = 0.05;
    double p_s = 0.05;
    double p_cc = 0.2;
    double p_ss = 0.2;
    double p_sc = 0.25;
    int length = 1000;
    std::uint64_t seed = 42;
};

/// Low and high coupling presets (P(C) = .05 / .25) and the wider-grid
/// preset used by the benchmark protocol.
DyadParams low_condition_params();
DyadParams high_condition_params();
DyadParams benchmark_params();

/// One simulated (C, S) pair of binary categorical series.  Each
/// probability comparison consumes a fresh uniform draw, so runs are
/// reproducible from the seed alone.
std::pair<TimeSeries, TimeSeries> simulate_dyad(const DyadParams& params);

struct SimulatedPair {
    int size = 0;
    int iteration = 0;
    std::uint64_t seed = 0;
    TimeSeries c;
    TimeSeries s;
};

/// The benchmark corpus: `iterations` pairs per size.  Run r (counted
/// across the whole grid in size-major order) uses seed base.seed + r.
std::vector<SimulatedPair> simulate_benchmark_set(const std::vector<int>& sizes,
                                                  int iterations, DyadParams base);

}  // namespace crqa
