#include "crqa/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace crqa {

TimeSeries normalize(const TimeSeries& ts, NormalizeMode mode) {
    validate(ts);
    if (mode == NormalizeMode::none) return ts;

    std::size_t n = ts.size();
    TimeSeries out{{}, SeriesKind::continuous};
    out.values.reserve(n);

    if (mode == NormalizeMode::unit_interval) {
        double lo = ts.values[0], hi = ts.values[0];
        for (double v : ts.values) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        double span = hi - lo;
        for (double v : ts.values)
            out.values.push_back(span == 0.0 ? 0.0 : (v - lo) / span);
        return out;
    }

    // zscore
    double sum = 0.0;
    for (double v : ts.values) sum += v;
    double mean = sum / static_cast<double>(n);
    if (n == 1) {
        out.values.push_back(0.0);
        return out;
    }
    double ss = 0.0;
    for (double v : ts.values) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd == 0.0) throw std::invalid_argument("degenerate normalization");
    for (double v : ts.values) out.values.push_back((v - mean) / sd);
    return out;
}

EmbeddedTrajectory embed(const TimeSeries& ts, int delay, int embed) {
    validate(ts);
    if (delay < 1) throw std::invalid_argument("delay must be >= 1");
    if (embed < 1) throw std::invalid_argument("embedding dimension must be >= 1");
    long long t = static_cast<long long>(ts.size());
    long long n = t - static_cast<long long>(embed - 1) * delay;
    if (n < 1) throw std::invalid_argument("series too short to embed");

    EmbeddedTrajectory traj;
    traj.dim = embed;
    traj.data.reserve(static_cast<std::size_t>(n) * embed);
    for (long long i = 0; i < n; ++i)
        for (int d = 0; d < embed; ++d)
            traj.data.push_back(ts.values[static_cast<std::size_t>(i + static_cast<long long>(d) * delay)]);
    return traj;
}

DistanceMatrix distance_matrix(const EmbeddedTrajectory& a, const EmbeddedTrajectory& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("trajectories have different dimensions");
    DistanceMatrix d;
    d.rows = a.size();
    d.cols = b.size();
    d.data.resize(static_cast<std::size_t>(d.rows) * d.cols);
    int m = a.dim;
    for (int i = 0; i < d.rows; ++i) {
        const double* pa = a.point(i);
        for (int j = 0; j < d.cols; ++j) {
            const double* pb = b.point(j);
            double acc = 0.0;
            for (int k = 0; k < m; ++k) {
                double diff = pa[k] - pb[k];
                acc += diff * diff;
            }
            d.at(i, j) = std::sqrt(acc);
        }
    }
    return d;
}

DistanceMatrix rescale_matrix(const DistanceMatrix& d, RescaleMode mode) {
    if (mode == RescaleMode::none) return d;

    double scale = 0.0;
    if (mode == RescaleMode::mean_distance) {
        // Row sums first, then their total: the same association the
        // streaming engine uses, so both agree bit for bit.
        double total = 0.0;
        for (int i = 0; i < d.rows; ++i) {
            double row = 0.0;
            for (int j = 0; j < d.cols; ++j) row += d.at(i, j);
            total += row;
        }
        scale = total / (static_cast<double>(d.rows) * static_cast<double>(d.cols));
    } else {
        for (double v : d.data) scale = v > scale ? v : scale;
    }
    if (scale == 0.0) return d;  // all-zero matrix stays as is

    DistanceMatrix out;
    out.rows = d.rows;
    out.cols = d.cols;
    out.data.reserve(d.data.size());
    for (double v : d.data) out.data.push_back(v / scale);
    return out;
}

RecurrencePlot threshold(const DistanceMatrix& d, double radius) {
    if (radius < 0.0) throw std::invalid_argument("radius must be >= 0");
    RecurrencePlot rp(d.rows, d.cols);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j)
            if (d.at(i, j) <= radius) rp.set(i, j);
    return rp;
}

}  // namespace crqa
