#include "crqa/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace crqa {
namespace {

struct LineScan {
    std::map<int, long long> counts;  // qualifying length -> line count
    long long lines = 0;
    long long points = 0;             // recurrent points on qualifying lines
    long long max_off_main = 0;       // longest line not on the main diagonal
};

// Maximal runs along every diagonal j - i = c.  Runs on the main
// diagonal (c = 0) are excluded from max_off_main only.
LineScan scan_diagonals(const RecurrencePlot& rp, int mindiagline) {
    LineScan scan;
    int rows = rp.rows(), cols = rp.cols();
    for (int c = -(rows - 1); c <= cols - 1; ++c) {
        int i0 = c < 0 ? -c : 0;
        int i1 = (cols - 1 - c < rows - 1) ? cols - 1 - c : rows - 1;
        int run = 0;
        for (int i = i0; i <= i1 + 1; ++i) {
            bool on = i <= i1 && rp.cell(i, i + c);
            if (on) {
                ++run;
            } else if (run > 0) {
                if (run >= mindiagline) {
                    ++scan.counts[run];
                    ++scan.lines;
                    scan.points += run;
                    if (c != 0 && run > scan.max_off_main) scan.max_off_main = run;
                }
                run = 0;
            }
        }
    }
    return scan;
}

LineScan scan_verticals(const RecurrencePlot& rp, int minvertline) {
    LineScan scan;
    int rows = rp.rows(), cols = rp.cols();
    for (int j = 0; j < cols; ++j) {
        int run = 0;
        for (int i = 0; i <= rows; ++i) {
            bool on = i < rows && rp.cell(i, j);
            if (on) {
                ++run;
            } else if (run > 0) {
                if (run >= minvertline) {
                    ++scan.counts[run];
                    ++scan.lines;
                    scan.points += run;
                }
                run = 0;
            }
        }
    }
    return scan;
}

double entropy_of(const std::map<int, long long>& counts, long long lines) {
    if (lines <= 0) return 0.0;
    double h = 0.0;
    for (const auto& [len, cnt] : counts) {
        (void)len;
        double p = static_cast<double>(cnt) / static_cast<double>(lines);
        h -= p * std::log(p);
    }
    return h;
}

void check_line_minimum(int value, const char* what) {
    if (value < 2)
        throw std::invalid_argument(std::string(what) + " must be >= 2");
}

double point_distance(const double* a, const double* b, int dim) {
    double acc = 0.0;
    for (int k = 0; k < dim; ++k) {
        double diff = a[k] - b[k];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

}  // namespace

long long LineHistogram::total_lines() const {
    long long n = 0;
    for (const auto& [len, cnt] : counts) {
        (void)len;
        n += cnt;
    }
    return n;
}

long long LineHistogram::total_points() const {
    long long n = 0;
    for (const auto& [len, cnt] : counts) n += static_cast<long long>(len) * cnt;
    return n;
}

LineHistogram diagonal_lines(const RecurrencePlot& rp, int mindiagline) {
    check_line_minimum(mindiagline, "mindiagline");
    LineHistogram h;
    h.orientation = LineHistogram::Orientation::diagonal;
    h.counts = scan_diagonals(rp, mindiagline).counts;
    return h;
}

LineHistogram vertical_lines(const RecurrencePlot& rp, int minvertline) {
    check_line_minimum(minvertline, "minvertline");
    LineHistogram h;
    h.orientation = LineHistogram::Orientation::vertical;
    h.counts = scan_verticals(rp, minvertline).counts;
    return h;
}

CrqaMeasures compute_measures(const RecurrencePlot& rp, int mindiagline, int minvertline) {
    check_line_minimum(mindiagline, "mindiagline");
    check_line_minimum(minvertline, "minvertline");

    CrqaMeasures m;
    long long points = rp.recurrent_points();
    if (points == 0) return m;

    m.rr = 100.0 * static_cast<double>(points) /
           (static_cast<double>(rp.rows()) * static_cast<double>(rp.cols()));

    LineScan diag = scan_diagonals(rp, mindiagline);
    m.det = 100.0 * static_cast<double>(diag.points) / static_cast<double>(points);
    m.nrline = diag.lines;
    m.maxline = diag.max_off_main;
    m.meanline = diag.lines > 0
                     ? static_cast<double>(diag.points) / static_cast<double>(diag.lines)
                     : 0.0;
    m.entropy = entropy_of(diag.counts, diag.lines);
    m.rel_entropy = diag.lines > 1 ? m.entropy / std::log(static_cast<double>(diag.lines)) : 0.0;

    LineScan vert = scan_verticals(rp, minvertline);
    m.lam = 100.0 * static_cast<double>(vert.points) / static_cast<double>(points);
    m.tt = vert.lines > 0 ? static_cast<double>(vert.points) / static_cast<double>(vert.lines)
                          : 0.0;
    return m;
}

WhitelineStats compute_whiteline(const RecurrencePlot& rp, int minvertline) {
    check_line_minimum(minvertline, "minvertline");
    WhitelineStats stats;
    long long total = 0;
    int rows = rp.rows(), cols = rp.cols();
    for (int j = 0; j < cols; ++j) {
        int run = 0;
        for (int i = 0; i <= rows; ++i) {
            bool off = i < rows && !rp.cell(i, j);
            if (off) {
                ++run;
            } else if (run > 0) {
                if (run >= minvertline) {
                    ++stats.count;
                    total += run;
                }
                run = 0;
            }
        }
    }
    stats.mean_length =
        stats.count > 0 ? static_cast<double>(total) / static_cast<double>(stats.count) : 0.0;
    return stats;
}

CrqaResult crqa(const TimeSeries& ts1, const TimeSeries& ts2, const CrqaParams& params) {
    if (ts1.kind != ts2.kind)
        throw std::invalid_argument("mismatched series kinds");
    check_line_minimum(params.mindiagline, "mindiagline");
    check_line_minimum(params.minvertline, "minvertline");
    if (params.embedding.radius < 0.0) throw std::invalid_argument("radius must be >= 0");

    auto [a, b] = truncate_to_common(ts1, ts2, params.thrshd);
    TimeSeries na = normalize(a, params.embedding.normalize);
    TimeSeries nb = normalize(b, params.embedding.normalize);
    EmbeddedTrajectory ea = embed(na, params.embedding.delay, params.embedding.embed);
    EmbeddedTrajectory eb = embed(nb, params.embedding.delay, params.embedding.embed);

    int n1 = ea.size(), n2 = eb.size();
    int dim = ea.dim;

    // The distance matrix is never materialized: one pass to find the
    // rescaling constant, one pass to threshold.
    double scale = 1.0;
    if (params.embedding.rescale == RescaleMode::mean_distance) {
        double total = 0.0;
        for (int i = 0; i < n1; ++i) {
            const double* pa = ea.point(i);
            double row = 0.0;
            for (int j = 0; j < n2; ++j) row += point_distance(pa, eb.point(j), dim);
            total += row;
        }
        double mean = total / (static_cast<double>(n1) * static_cast<double>(n2));
        if (mean != 0.0) scale = mean;
    } else if (params.embedding.rescale == RescaleMode::max_distance) {
        double mx = 0.0;
        for (int i = 0; i < n1; ++i) {
            const double* pa = ea.point(i);
            for (int j = 0; j < n2; ++j) {
                double d = point_distance(pa, eb.point(j), dim);
                if (d > mx) mx = d;
            }
        }
        if (mx != 0.0) scale = mx;
    }

    RecurrencePlot rp(n1, n2);
    for (int i = 0; i < n1; ++i) {
        const double* pa = ea.point(i);
        for (int j = 0; j < n2; ++j) {
            double d = point_distance(pa, eb.point(j), dim);
            if (d / scale <= params.embedding.radius) rp.set(i, j);
        }
    }

    CrqaResult result;
    result.measures = compute_measures(rp, params.mindiagline, params.minvertline);
    if (params.whiteline) result.whiteline = compute_whiteline(rp, params.minvertline);
    if (params.keep_plot) result.plot = std::move(rp);
    return result;
}

CrqaResult crqa_from_plot(const RecurrencePlot& rp, const CrqaParams& params) {
    CrqaResult result;
    result.measures = compute_measures(rp, params.mindiagline, params.minvertline);
    if (params.whiteline) result.whiteline = compute_whiteline(rp, params.minvertline);
    if (params.keep_plot) result.plot = rp;
    return result;
}

std::vector<WindowedMeasures> wincrqa(const TimeSeries& ts1, const TimeSeries& ts2,
                                      const CrqaParams& params, int windowsize, int step) {
    if (windowsize < 1) throw std::invalid_argument("windowsize must be >= 1");
    if (step < 1) throw std::invalid_argument("step must be >= 1");
    auto [a, b] = truncate_to_common(ts1, ts2, params.thrshd);
    long long t = static_cast<long long>(a.size());
    if (windowsize > t) throw std::invalid_argument("windowsize exceeds series length");

    std::vector<WindowedMeasures> out;
    CrqaParams wparams = params;
    wparams.whiteline = false;
    wparams.keep_plot = false;
    wparams.thrshd = 0;
    for (long long start = 0; start + windowsize <= t; start += step) {
        TimeSeries wa{std::vector<double>(a.values.begin() + start,
                                          a.values.begin() + start + windowsize),
                      a.kind};
        TimeSeries wb{std::vector<double>(b.values.begin() + start,
                                          b.values.begin() + start + windowsize),
                      b.kind};
        WindowedMeasures wm;
        wm.window_start = static_cast<int>(start);
        wm.measures = crqa(wa, wb, wparams).measures;
        out.push_back(std::move(wm));
    }
    return out;
}

}  // namespace crqa
