#include "crqa/categorical.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "profile_util.hpp"

namespace crqa {
namespace {

void require_categorical(const TimeSeries& a, const TimeSeries& b) {
    if (a.kind != SeriesKind::categorical || b.kind != SeriesKind::categorical)
        throw std::invalid_argument("categorical method on continuous data");
}

}  // namespace

long long ContingencyTable::total() const {
    long long n = 0;
    for (long long c : counts) n += c;
    return n;
}

long long ContingencyTable::trace() const {
    long long n = 0;
    int k = static_cast<int>(alphabet.size());
    for (int i = 0; i < k; ++i) n += at(i, i);
    return n;
}

ContingencyTable contingency_table(const TimeSeries& x, const TimeSeries& y,
                                   int lag, long long thrshd) {
    require_categorical(x, y);
    auto [a, b] = truncate_to_common(x, y, thrshd);
    long long t = static_cast<long long>(a.size());
    long long absl = lag < 0 ? -static_cast<long long>(lag) : static_cast<long long>(lag);
    if (absl >= t)
        throw std::invalid_argument("lag " + std::to_string(lag) +
                                    " leaves no overlap for series of length " + std::to_string(t));

    std::set<int> codes;
    for (double v : a.values) codes.insert(static_cast<int>(v));
    for (double v : b.values) codes.insert(static_cast<int>(v));

    ContingencyTable ct;
    ct.lag = lag;
    ct.alphabet.assign(codes.begin(), codes.end());
    std::size_t k = ct.alphabet.size();
    ct.counts.assign(k * k, 0);

    auto index_of = [&ct](int code) {
        return static_cast<std::size_t>(
            std::lower_bound(ct.alphabet.begin(), ct.alphabet.end(), code) - ct.alphabet.begin());
    };

    // lag >= 0 pairs x(t) with y(t+lag); a negative lag shifts x instead.
    long long xoff = lag < 0 ? absl : 0;
    long long yoff = lag < 0 ? 0 : absl;
    for (long long i = 0; i + absl < t; ++i) {
        int cx = static_cast<int>(a.values[static_cast<std::size_t>(i + xoff)]);
        int cy = static_cast<int>(b.values[static_cast<std::size_t>(i + yoff)]);
        ++ct.counts[index_of(cx) * k + index_of(cy)];
    }
    return ct;
}

RecurrenceProfile ctcrqa(const TimeSeries& ts1, const TimeSeries& ts2,
                         const std::vector<int>& lags, long long thrshd) {
    require_categorical(ts1, ts2);
    if (lags.empty()) throw std::invalid_argument("no lags given");

    // The table orientation pairs x(t) with y(t+lag), so the profile lag
    // convention (series1[i+d] against series2[i]) maps to the table at
    // the mirrored lag.
    RecurrenceProfile p;
    p.axis = RecurrenceProfile::Axis::lag;
    for (int lag : lags) {
        ContingencyTable ct = contingency_table(ts1, ts2, -lag, thrshd);
        p.positions.push_back(lag);
        p.values.push_back(static_cast<double>(ct.trace()) / static_cast<double>(ct.total()));
    }
    detail::finalize_profile(p);
    return p;
}

RecurrenceProfile calcphi(const TimeSeries& t1, const TimeSeries& t2,
                          int ws, int k, long long thrshd) {
    require_categorical(t1, t2);
    if (ws < 0) throw std::invalid_argument("ws must be >= 0");
    auto [a, b] = truncate_to_common(t1, t2, thrshd);
    long long t = static_cast<long long>(a.size());
    if (2LL * ws + 1 > t)
        throw std::invalid_argument("ws too large: 2*ws+1 must not exceed the series length");

    double code = static_cast<double>(k);
    bool present = false;
    for (double v : a.values)
        if (v == code) { present = true; break; }
    if (!present)
        for (double v : b.values)
            if (v == code) { present = true; break; }
    if (!present)
        throw std::invalid_argument("code " + std::to_string(k) + " not present in either series");

    RecurrenceProfile p;
    p.axis = RecurrenceProfile::Axis::lag;
    for (int d = -ws; d <= ws; ++d) {
        long long j0 = d < 0 ? -static_cast<long long>(d) : 0;
        long long j1 = d > 0 ? t - 1 - d : t - 1;
        long long n11 = 0, n10 = 0, n01 = 0, n00 = 0;
        for (long long j = j0; j <= j1; ++j) {
            bool ex = a.values[static_cast<std::size_t>(j + d)] == code;
            bool ey = b.values[static_cast<std::size_t>(j)] == code;
            if (ex && ey) ++n11;
            else if (ex) ++n10;
            else if (ey) ++n01;
            else ++n00;
        }
        double phi = 0.0;
        long long r1 = n11 + n10, r0 = n01 + n00, c1 = n11 + n01, c0 = n10 + n00;
        if (r1 > 0 && r0 > 0 && c1 > 0 && c0 > 0) {
            phi = static_cast<double>(n11 * n00 - n10 * n01) /
                  std::sqrt(static_cast<double>(r1) * static_cast<double>(r0) *
                            static_cast<double>(c1) * static_cast<double>(c0));
            if (phi > 1.0) phi = 1.0;
            if (phi < -1.0) phi = -1.0;
        }
        p.positions.push_back(d);
        p.values.push_back(phi);
    }
    detail::finalize_profile(p);
    return p;
}

}  // namespace crqa
