#include "crqa/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

// Everything here is written as plainly as possible and shares no code
// with the fast engine: series are normalized, embedded, compared and
// counted with bare loops over materialized matrices.  Arithmetic is
// expressed in the same order as the fast engine so results match
// exactly, but the enumeration logic is independent.

namespace crqa::oracle {
namespace {

std::vector<double> plain_normalize(const std::vector<double>& x, NormalizeMode mode) {
    std::size_t n = x.size();
    if (mode == NormalizeMode::none) return x;
    std::vector<double> out(n);
    if (mode == NormalizeMode::unit_interval) {
        double lo = x[0], hi = x[0];
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] < lo) lo = x[i];
            if (x[i] > hi) hi = x[i];
        }
        for (std::size_t i = 0; i < n; ++i)
            out[i] = (hi - lo) == 0.0 ? 0.0 : (x[i] - lo) / (hi - lo);
        return out;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += x[i];
    double mean = sum / static_cast<double>(n);
    if (n == 1) return {0.0};
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += (x[i] - mean) * (x[i] - mean);
    double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd == 0.0) throw std::invalid_argument("degenerate normalization");
    for (std::size_t i = 0; i < n; ++i) out[i] = (x[i] - mean) / sd;
    return out;
}

// points[i][d] = x[i + d*delay]
std::vector<std::vector<double>> plain_embed(const std::vector<double>& x, int delay, int dim) {
    long long n = static_cast<long long>(x.size()) - static_cast<long long>(dim - 1) * delay;
    if (n < 1) throw std::invalid_argument("series too short to embed");
    std::vector<std::vector<double>> pts(static_cast<std::size_t>(n), std::vector<double>(dim));
    for (long long i = 0; i < n; ++i)
        for (int d = 0; d < dim; ++d)
            pts[static_cast<std::size_t>(i)][d] = x[static_cast<std::size_t>(i + static_cast<long long>(d) * delay)];
    return pts;
}

}  // namespace

CrqaMeasures crqa_measures(const TimeSeries& ts1, const TimeSeries& ts2,
                           const CrqaParams& params) {
    if (ts1.kind != ts2.kind) throw std::invalid_argument("mismatched series kinds");
    if (params.mindiagline < 2) throw std::invalid_argument("mindiagline must be >= 2");
    if (params.minvertline < 2) throw std::invalid_argument("minvertline must be >= 2");
    if (params.embedding.radius < 0.0) throw std::invalid_argument("radius must be >= 0");

    validate(ts1);
    validate(ts2);
    std::size_t t1 = ts1.size(), t2 = ts2.size();
    long long diff = t1 > t2 ? static_cast<long long>(t1 - t2) : static_cast<long long>(t2 - t1);
    if (diff > params.thrshd)
        throw std::invalid_argument("series length difference exceeds thrshd");
    std::size_t t = t1 < t2 ? t1 : t2;

    std::vector<double> x(ts1.values.begin(), ts1.values.begin() + t);
    std::vector<double> y(ts2.values.begin(), ts2.values.begin() + t);
    x = plain_normalize(x, params.embedding.normalize);
    y = plain_normalize(y, params.embedding.normalize);

    auto pa = plain_embed(x, params.embedding.delay, params.embedding.embed);
    auto pb = plain_embed(y, params.embedding.delay, params.embedding.embed);
    std::size_t n1 = pa.size(), n2 = pb.size();
    int dim = params.embedding.embed;

    std::vector<std::vector<double>> dist(n1, std::vector<double>(n2));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            double acc = 0.0;
            for (int k = 0; k < dim; ++k) {
                double diffk = pa[i][k] - pb[j][k];
                acc += diffk * diffk;
            }
            dist[i][j] = std::sqrt(acc);
        }

    double scale = 1.0;
    if (params.embedding.rescale == RescaleMode::mean_distance) {
        double total = 0.0;
        for (std::size_t i = 0; i < n1; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n2; ++j) row += dist[i][j];
            total += row;
        }
        double mean = total / (static_cast<double>(n1) * static_cast<double>(n2));
        if (mean != 0.0) scale = mean;
    } else if (params.embedding.rescale == RescaleMode::max_distance) {
        double mx = 0.0;
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                if (dist[i][j] > mx) mx = dist[i][j];
        if (mx != 0.0) scale = mx;
    }

    std::vector<std::vector<char>> plot(n1, std::vector<char>(n2, 0));
    long long points = 0;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            if (dist[i][j] / scale <= params.embedding.radius) {
                plot[i][j] = 1;
                ++points;
            }

    CrqaMeasures m;
    if (points == 0) return m;

    m.rr = 100.0 * static_cast<double>(points) /
           (static_cast<double>(n1) * static_cast<double>(n2));

    // Every diagonal, every run, one by one.
    std::map<int, long long> diag_hist;
    long long diag_lines = 0, diag_points = 0, max_off_main = 0;
    long long rows = static_cast<long long>(n1), cols = static_cast<long long>(n2);
    for (long long c = -(rows - 1); c <= cols - 1; ++c) {
        long long run = 0;
        for (long long i = 0; i < rows; ++i) {
            long long j = i + c;
            bool on = j >= 0 && j < cols && plot[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (on) {
                ++run;
            } else {
                if (run >= params.mindiagline) {
                    ++diag_hist[static_cast<int>(run)];
                    ++diag_lines;
                    diag_points += run;
                    if (c != 0 && run > max_off_main) max_off_main = run;
                }
                run = 0;
            }
        }
        if (run >= params.mindiagline) {
            ++diag_hist[static_cast<int>(run)];
            ++diag_lines;
            diag_points += run;
            if (c != 0 && run > max_off_main) max_off_main = run;
        }
    }

    m.det = 100.0 * static_cast<double>(diag_points) / static_cast<double>(points);
    m.nrline = diag_lines;
    m.maxline = max_off_main;
    m.meanline = diag_lines > 0
                     ? static_cast<double>(diag_points) / static_cast<double>(diag_lines)
                     : 0.0;
    double h = 0.0;
    for (const auto& [len, cnt] : diag_hist) {
        (void)len;
        double p = static_cast<double>(cnt) / static_cast<double>(diag_lines);
        h -= p * std::log(p);
    }
    m.entropy = diag_lines > 0 ? h : 0.0;
    m.rel_entropy = diag_lines > 1 ? m.entropy / std::log(static_cast<double>(diag_lines)) : 0.0;

    long long vert_lines = 0, vert_points = 0;
    for (std::size_t j = 0; j < n2; ++j) {
        long long run = 0;
        for (std::size_t i = 0; i < n1; ++i) {
            if (plot[i][j]) {
                ++run;
            } else {
                if (run >= params.minvertline) {
                    ++vert_lines;
                    vert_points += run;
                }
                run = 0;
            }
        }
        if (run >= params.minvertline) {
            ++vert_lines;
            vert_points += run;
        }
    }
    m.lam = 100.0 * static_cast<double>(vert_points) / static_cast<double>(points);
    m.tt = vert_lines > 0 ? static_cast<double>(vert_points) / static_cast<double>(vert_lines)
                          : 0.0;
    return m;
}

}  // namespace crqa::oracle
