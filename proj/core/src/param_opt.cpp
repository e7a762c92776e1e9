#include "crqa/param_opt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "crqa/measures.hpp"

namespace crqa {
namespace {

void warn(std::vector<std::string>* sink, const std::string& message) {
    if (sink) sink->push_back(message);
}

std::vector<int> default_range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

int effective_bins(std::size_t t, int bins) {
    if (bins > 0) return bins;
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(t))));
}

// First delay in `candidates` whose AMI value is a local minimum that no
// look-ahead offset undercuts.
int delay_for_series(const std::vector<double>& ami, const std::vector<int>& candidates,
                     const std::vector<int>& steps, std::vector<std::string>* warnings) {
    int lgm = static_cast<int>(ami.size()) - 1;
    for (int tau : candidates) {
        if (tau < 1 || tau > lgm) continue;
        if (ami[tau] > ami[tau - 1]) continue;
        bool sustained = true;
        for (int s : steps) {
            if (tau + s > lgm) break;  // look-ahead truncated at the scan edge
            if (ami[tau + s] < ami[tau]) {
                sustained = false;
                break;
            }
        }
        if (sustained) return tau;
    }
    // No sustained local minimum: fall back to the 1/e drop.
    double cutoff = ami[0] / std::exp(1.0);
    for (int tau = 1; tau <= lgm; ++tau) {
        if (ami[tau] < cutoff) {
            warn(warnings, "no local AMI minimum; using first drop below AMI(0)/e at delay " +
                               std::to_string(tau));
            return tau;
        }
    }
    warn(warnings, "AMI never dropped below AMI(0)/e; using delay " + std::to_string(lgm));
    return lgm;
}

double euclid_m(const std::vector<double>& x, long long i, long long j, int m, int delay) {
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        double diff = x[static_cast<std::size_t>(i + static_cast<long long>(k) * delay)] -
                      x[static_cast<std::size_t>(j + static_cast<long long>(k) * delay)];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

int bottom_out_dimension(const std::vector<double>& fnn, double threshold, double improvement,
                         std::vector<std::string>* warnings) {
    int m_count = static_cast<int>(fnn.size());
    for (int m = 1; m <= m_count; ++m) {
        if (fnn[m - 1] < threshold) return m;
        if (m >= 2 && fnn[m - 2] - fnn[m - 1] < improvement) return m;
    }
    warn(warnings, "FNN never bottomed out; using max_embed " + std::to_string(m_count));
    return m_count;
}

}  // namespace

std::vector<double> average_mutual_information(const TimeSeries& ts, int maxlag, int bins) {
    validate(ts);
    if (maxlag < 0) throw std::invalid_argument("maxlag must be >= 0");
    long long t = static_cast<long long>(ts.size());
    if (maxlag >= t)
        throw std::invalid_argument("maxlag must leave at least one overlapping sample");
    int b = effective_bins(ts.size(), bins);

    double lo = ts.values[0], hi = ts.values[0];
    for (double v : ts.values) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    if (hi == lo) throw std::invalid_argument("zero-entropy series");
    double width = (hi - lo) / static_cast<double>(b);

    std::vector<int> bin(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        int idx = static_cast<int>((ts.values[i] - lo) / width);
        if (idx >= b) idx = b - 1;
        if (idx < 0) idx = 0;
        bin[i] = idx;
    }

    std::vector<double> ami(static_cast<std::size_t>(maxlag) + 1, 0.0);
    std::vector<long long> joint(static_cast<std::size_t>(b) * b);
    std::vector<long long> m1(b), m2(b);
    for (int lag = 0; lag <= maxlag; ++lag) {
        long long n = t - lag;
        std::fill(joint.begin(), joint.end(), 0);
        std::fill(m1.begin(), m1.end(), 0);
        std::fill(m2.begin(), m2.end(), 0);
        for (long long i = 0; i < n; ++i) {
            int bi = bin[static_cast<std::size_t>(i)];
            int bj = bin[static_cast<std::size_t>(i + lag)];
            ++joint[static_cast<std::size_t>(bi) * b + bj];
            ++m1[bi];
            ++m2[bj];
        }
        double mi = 0.0;
        for (int i = 0; i < b; ++i) {
            if (m1[i] == 0) continue;
            for (int j = 0; j < b; ++j) {
                long long c = joint[static_cast<std::size_t>(i) * b + j];
                if (c == 0) continue;
                double p = static_cast<double>(c) / static_cast<double>(n);
                mi += p * std::log(static_cast<double>(c) * static_cast<double>(n) /
                                   (static_cast<double>(m1[i]) * static_cast<double>(m2[j])));
            }
        }
        ami[static_cast<std::size_t>(lag)] = mi;
    }
    return ami;
}

int combine_delays(int d1, int d2, int closeness) {
    int gap = d1 > d2 ? d1 - d2 : d2 - d1;
    if (gap <= closeness)
        return static_cast<int>(std::lround((static_cast<double>(d1) + d2) / 2.0));
    return d1 > d2 ? d1 : d2;
}

int select_delay(const TimeSeries& ts1, const TimeSeries& ts2,
                 const OptimizeConfig& cfg, std::vector<std::string>* warnings) {
    std::vector<int> steps = cfg.steps.empty() ? default_range(1, 10) : cfg.steps;
    std::vector<int> candidates = cfg.cut_del.empty() ? default_range(1, 40) : cfg.cut_del;

    long long t = static_cast<long long>(std::min(ts1.size(), ts2.size()));
    int lgm = cfg.lgm;
    if (lgm >= t) {
        lgm = static_cast<int>(t - 2);
        if (lgm < 1) throw std::invalid_argument("series too short for the AMI scan");
        warn(warnings, "lgm truncated to " + std::to_string(lgm) + " (series too short)");
    }

    auto ami1 = average_mutual_information(ts1, lgm, cfg.ami_bins);
    auto ami2 = average_mutual_information(ts2, lgm, cfg.ami_bins);
    int d1 = delay_for_series(ami1, candidates, steps, warnings);
    int d2 = delay_for_series(ami2, candidates, steps, warnings);

    int closeness = cfg.delay_closeness;
    if (closeness <= 0) {
        int larger = d1 > d2 ? d1 : d2;
        closeness = static_cast<int>(std::ceil(0.1 * larger));
        if (closeness < 1) closeness = 1;
    }
    return combine_delays(d1, d2, closeness);
}

std::vector<double> false_nearest_neighbors(const TimeSeries& ts, int delay, int max_embed,
                                            double rtol, std::vector<std::string>* warnings) {
    validate(ts);
    if (delay < 1) throw std::invalid_argument("delay must be >= 1");
    if (max_embed < 1) throw std::invalid_argument("max_embed must be >= 1");
    long long t = static_cast<long long>(ts.size());

    // Dimension m is assessable only while the (m+1)-coordinate extension
    // leaves at least two points.
    int top = max_embed;
    while (top >= 1 && t - static_cast<long long>(top) * delay < 2) --top;
    if (top < 1) throw std::invalid_argument("series too short to embed");
    if (top < max_embed)
        warn(warnings, "max_embed truncated to " + std::to_string(top) + " (series too short)");

    const std::vector<double>& x = ts.values;
    std::vector<double> fnn;
    for (int m = 1; m <= top; ++m) {
        long long n = t - static_cast<long long>(m) * delay;  // points with an extension
        long long false_count = 0;
        for (long long i = 0; i < n; ++i) {
            long long best = -1;
            double best_d = 0.0;
            for (long long j = 0; j < n; ++j) {
                if (j == i) continue;
                double d = euclid_m(x, i, j, m, delay);
                if (best < 0 || d < best_d) {
                    best = j;
                    best_d = d;
                }
            }
            double growth = std::fabs(
                x[static_cast<std::size_t>(i + static_cast<long long>(m) * delay)] -
                x[static_cast<std::size_t>(best + static_cast<long long>(m) * delay)]);
            if (growth > rtol * best_d) ++false_count;
        }
        fnn.push_back(static_cast<double>(false_count) / static_cast<double>(n));
    }
    return fnn;
}

int select_embedding(const TimeSeries& ts1, const TimeSeries& ts2, int delay,
                     const OptimizeConfig& cfg, std::vector<std::string>* warnings) {
    auto f1 = false_nearest_neighbors(ts1, delay, cfg.max_embed, cfg.fnn_rtol, warnings);
    auto f2 = false_nearest_neighbors(ts2, delay, cfg.max_embed, cfg.fnn_rtol, warnings);
    int m1 = bottom_out_dimension(f1, cfg.fnn_threshold, cfg.fnn_improvement, warnings);
    int m2 = bottom_out_dimension(f2, cfg.fnn_threshold, cfg.fnn_improvement, warnings);
    return m1 > m2 ? m1 : m2;
}

double select_radius(const TimeSeries& ts1, const TimeSeries& ts2, int delay, int emddim,
                     const OptimizeConfig& cfg, std::vector<std::string>* warnings) {
    if (ts1.kind != ts2.kind) throw std::invalid_argument("mismatched series kinds");
    auto [a, b] = truncate_to_common(ts1, ts2, 0);
    TimeSeries na = normalize(a, cfg.normalize);
    TimeSeries nb = normalize(b, cfg.normalize);
    EmbeddedTrajectory ea = embed(na, delay, emddim);
    EmbeddedTrajectory eb = embed(nb, delay, emddim);
    int n1 = ea.size(), n2 = eb.size();
    int dim = ea.dim;

    // All pairwise rescaled distances, sorted once; the recurrence rate
    // of any radius is then a binary search away.  The arithmetic is the
    // pipeline's own, so a recomputation through crqa() agrees exactly.
    std::vector<double> dist;
    dist.reserve(static_cast<std::size_t>(n1) * n2);
    for (int i = 0; i < n1; ++i) {
        const double* pa = ea.point(i);
        for (int j = 0; j < n2; ++j) {
            const double* pb = eb.point(j);
            double acc = 0.0;
            for (int k = 0; k < dim; ++k) {
                double diff = pa[k] - pb[k];
                acc += diff * diff;
            }
            dist.push_back(std::sqrt(acc));
        }
    }
    double scale = 1.0;
    if (cfg.rescale == RescaleMode::mean_distance) {
        double total = 0.0;
        std::size_t idx = 0;
        for (int i = 0; i < n1; ++i) {
            double row = 0.0;
            for (int j = 0; j < n2; ++j) row += dist[idx++];
            total += row;
        }
        double mean = total / (static_cast<double>(n1) * static_cast<double>(n2));
        if (mean != 0.0) scale = mean;
    } else if (cfg.rescale == RescaleMode::max_distance) {
        double mx = 0.0;
        for (double d : dist) mx = d > mx ? d : mx;
        if (mx != 0.0) scale = mx;
    }
    for (double& d : dist) d = d / scale;
    std::sort(dist.begin(), dist.end());

    double total_cells = static_cast<double>(n1) * static_cast<double>(n2);
    auto rr_at = [&dist, total_cells](double radius) {
        auto it = std::upper_bound(dist.begin(), dist.end(), radius);
        return 100.0 * static_cast<double>(it - dist.begin()) / total_cells;
    };

    std::vector<double> grid = cfg.radius_grid;
    if (grid.empty()) {
        double mx = dist.empty() ? 0.0 : dist.back();
        if (mx <= 0.0) {
            warn(warnings, "degenerate distance distribution; radius 0");
            return 0.0;
        }
        int points = cfg.radius_grid_points > 1 ? cfg.radius_grid_points : 64;
        double log_lo = std::log(0.01 * mx), log_hi = std::log(mx);
        for (int k = 0; k < points; ++k)
            grid.push_back(std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(k) /
                                                 static_cast<double>(points - 1)));
    } else {
        std::sort(grid.begin(), grid.end());
    }

    double best_radius = grid.front();
    double best_gap = -1.0;
    for (double r : grid) {
        double rr = rr_at(r);
        if (rr >= cfg.target_rr_lo && rr <= cfg.target_rr_hi) return r;
        double gap = rr < cfg.target_rr_lo ? cfg.target_rr_lo - rr : rr - cfg.target_rr_hi;
        if (best_gap < 0.0 || gap < best_gap) {
            best_gap = gap;
            best_radius = r;
        }
    }
    warn(warnings, "no grid radius reached the target recurrence band; returning the closest");
    return best_radius;
}

OptimalParams optimize_param(const TimeSeries& ts1, const TimeSeries& ts2,
                             const OptimizeConfig& cfg) {
    OptimalParams out;
    try {
        out.delay = select_delay(ts1, ts2, cfg, &out.warnings);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("delay selection: ") + e.what());
    }
    try {
        out.emddim = select_embedding(ts1, ts2, out.delay, cfg, &out.warnings);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("embedding selection: ") + e.what());
    }
    try {
        out.radius = select_radius(ts1, ts2, out.delay, out.emddim, cfg, &out.warnings);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("radius selection: ") + e.what());
    }
    return out;
}

}  // namespace crqa
