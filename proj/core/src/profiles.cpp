#include "crqa/profiles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "profile_util.hpp"

namespace crqa {
namespace {

// Fraction of pairs (x[j + d], y[j]) within radius over the valid
// overlap; the overlap shrinks to T - |d| samples at lag d.
double lag_rate(const std::vector<double>& x, const std::vector<double>& y,
                int d, double radius) {
    long long t = static_cast<long long>(x.size());
    long long j0 = d < 0 ? -static_cast<long long>(d) : 0;
    long long j1 = d > 0 ? t - 1 - d : t - 1;
    long long hits = 0;
    for (long long j = j0; j <= j1; ++j)
        if (std::fabs(x[static_cast<std::size_t>(j + d)] - y[static_cast<std::size_t>(j)]) <= radius)
            ++hits;
    long long overlap = t - (d < 0 ? -static_cast<long long>(d) : static_cast<long long>(d));
    return static_cast<double>(hits) / static_cast<double>(overlap);
}

}  // namespace

RecurrenceProfile drpdfromts(const TimeSeries& ts1, const TimeSeries& ts2,
                             int ws, double radius, long long thrshd) {
    if (ts1.kind != ts2.kind) throw std::invalid_argument("mismatched series kinds");
    if (ws < 0) throw std::invalid_argument("ws must be >= 0");
    if (radius < 0.0) throw std::invalid_argument("radius must be >= 0");
    auto [a, b] = truncate_to_common(ts1, ts2, thrshd);
    long long t = static_cast<long long>(a.size());
    if (2LL * ws + 1 > t)
        throw std::invalid_argument("ws too large: 2*ws+1 must not exceed the series length");

    RecurrenceProfile p;
    p.axis = RecurrenceProfile::Axis::lag;
    for (int d = -ws; d <= ws; ++d) {
        p.positions.push_back(d);
        p.values.push_back(lag_rate(a.values, b.values, d, radius));
    }
    detail::finalize_profile(p);
    return p;
}

RecurrenceProfile windowdrp(const TimeSeries& x, const TimeSeries& y,
                            int step, int windowsize, int lagwidth,
                            double radius, long long thrshd) {
    if (x.kind != y.kind) throw std::invalid_argument("mismatched series kinds");
    if (step < 1) throw std::invalid_argument("step must be >= 1");
    if (windowsize < 1) throw std::invalid_argument("windowsize must be >= 1");
    if (lagwidth < 0 || lagwidth >= windowsize)
        throw std::invalid_argument("lagwidth must be in [0, windowsize)");
    if (radius < 0.0) throw std::invalid_argument("radius must be >= 0");
    auto [a, b] = truncate_to_common(x, y, thrshd);
    long long t = static_cast<long long>(a.size());
    if (windowsize > t) throw std::invalid_argument("windowsize exceeds series length");

    RecurrenceProfile p;
    p.axis = RecurrenceProfile::Axis::window_start;
    for (long long start = 0; start + windowsize <= t; start += step) {
        std::vector<double> wa(a.values.begin() + start, a.values.begin() + start + windowsize);
        std::vector<double> wb(b.values.begin() + start, b.values.begin() + start + windowsize);
        double sum = 0.0;
        for (int d = -lagwidth; d <= lagwidth; ++d) sum += lag_rate(wa, wb, d, radius);
        p.positions.push_back(static_cast<int>(start));
        p.values.push_back(sum / static_cast<double>(2 * lagwidth + 1));
    }
    detail::finalize_profile(p);
    return p;
}

RecurrenceProfile cross_correlation(const TimeSeries& x, const TimeSeries& y,
                                    int maxlag, long long thrshd) {
    if (x.kind != y.kind) throw std::invalid_argument("mismatched series kinds");
    if (maxlag < 0) throw std::invalid_argument("maxlag must be >= 0");
    auto [a, b] = truncate_to_common(x, y, thrshd);
    long long t = static_cast<long long>(a.size());
    if (t - maxlag < 3)
        throw std::invalid_argument("maxlag too large: overlap must keep at least 3 samples");

    RecurrenceProfile p;
    p.axis = RecurrenceProfile::Axis::lag;
    for (int d = -maxlag; d <= maxlag; ++d) {
        long long j0 = d < 0 ? -static_cast<long long>(d) : 0;
        long long j1 = d > 0 ? t - 1 - d : t - 1;
        long long n = j1 - j0 + 1;

        double sx = 0.0, sy = 0.0;
        for (long long j = j0; j <= j1; ++j) {
            sx += a.values[static_cast<std::size_t>(j + d)];
            sy += b.values[static_cast<std::size_t>(j)];
        }
        double mx = sx / static_cast<double>(n);
        double my = sy / static_cast<double>(n);
        double sxy = 0.0, sxx = 0.0, syy = 0.0;
        for (long long j = j0; j <= j1; ++j) {
            double dx = a.values[static_cast<std::size_t>(j + d)] - mx;
            double dy = b.values[static_cast<std::size_t>(j)] - my;
            sxy += dx * dy;
            sxx += dx * dx;
            syy += dy * dy;
        }

        double r = 0.0;
        if (sxx == 0.0 || syy == 0.0) {
            p.warnings.push_back("zero-variance segment at lag " + std::to_string(d));
        } else {
            r = sxy / std::sqrt(sxx * syy);
            if (r > 1.0) r = 1.0;
            if (r < -1.0) r = -1.0;
        }
        p.positions.push_back(d);
        p.values.push_back(r);
    }
    detail::finalize_profile(p);
    return p;
}

}  // namespace crqa
