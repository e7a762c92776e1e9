#pragma once

#include <string>
#include <vector>

#include "crqa/embedding.hpp"
#include "crqa/time_series.hpp"

namespace crqa {

/// Settings for the delay/dimension/radius search.  Every field has a
/// working default so the whole struct can be echoed into reports.
struct OptimizeConfig {
    int lgm = 50;                 // largest lag examined by the AMI scan
    std::vector<int> steps;       // look-ahead offsets sustaining a minimum (default 1..10)
    std::vector<int> cut_del;     // candidate delays (default 1..40)
    double target_rr_lo = 1.0;    // acceptable recurrence-rate band, percent
    double target_rr_hi = 5.0;
    int max_embed = 10;
    std::vector<double> radius_grid;  // empty = 64 log-spaced points, 1%..100% of max distance
    int radius_grid_points = 64;
    NormalizeMode normalize = NormalizeMode::none;
    RescaleMode rescale = RescaleMode::none;
    int delay_closeness = 0;      // 0 = ceil(0.1 * max(d1, d2)), at least 1
    double fnn_rtol = 10.0;
    double fnn_threshold = 0.01;      // fraction below which FNN "bottoms out"
    double fnn_improvement = 0.001;   // minimal drop still counted as progress
    int ami_bins = 0;             // 0 = ceil(sqrt(T)) equal-width bins
};

struct OptimalParams {
    double radius = 0.0;
    int emddim = 1;
    int delay = 1;
    std::vector<std::string> warnings;
};

/// Average mutual information (nats) of the series against its own
/// lagged copy for lags 0..maxlag, estimated with `bins` equal-width
/// bins over the series range.  AMI(0) is the marginal entropy.
std::vector<double> average_mutual_information(const TimeSeries& ts, int maxlag, int bins);

/// Merges the per-series delays: delays within `closeness` of each other
/// average (rounded), otherwise the larger one wins.
int combine_delays(int d1, int d2, int closeness);

/// First sustained local minimum of the AMI curve of each series,
/// combined with combine_delays.  Falls back to the first lag where AMI
/// drops below AMI(0)/e when no local minimum exists, with a warning.
int select_delay(const TimeSeries& ts1, const TimeSeries& ts2,
                 const OptimizeConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// Fraction of false nearest neighbors per embedding dimension
/// 1..max_embed (Kennel criterion: the neighbor distance grows by more
/// than a factor rtol when the next coordinate is appended).
std::vector<double> false_nearest_neighbors(const TimeSeries& ts, int delay, int max_embed,
                                            double rtol = 10.0,
                                            std::vector<std::string>* warnings = nullptr);

/// First dimension at which the FNN fraction bottoms out for either
/// series (the larger of the two per-series answers).
int select_embedding(const TimeSeries& ts1, const TimeSeries& ts2, int delay,
                     const OptimizeConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// Smallest radius on the (ascending) grid whose full-pipeline
/// recurrence rate lands inside the target band; the nearest-to-band
/// radius plus a warning when none does.
double select_radius(const TimeSeries& ts1, const TimeSeries& ts2, int delay, int emddim,
                     const OptimizeConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// delay -> embedding dimension -> radius, in that order.
OptimalParams optimize_param(const TimeSeries& ts1, const TimeSeries& ts2,
                             const OptimizeConfig& cfg = {});

}  // namespace crqa
