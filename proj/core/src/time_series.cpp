#include "crqa/time_series.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace crqa {

TimeSeries TimeSeries::categorical(std::vector<double> v) {
    TimeSeries ts{std::move(v), SeriesKind::categorical};
    validate(ts);
    return ts;
}

TimeSeries TimeSeries::continuous(std::vector<double> v) {
    TimeSeries ts{std::move(v), SeriesKind::continuous};
    validate(ts);
    return ts;
}

void validate(const TimeSeries& ts) {
    if (ts.values.empty()) throw std::invalid_argument("series is empty");
    for (std::size_t i = 0; i < ts.values.size(); ++i) {
        double v = ts.values[i];
        if (!std::isfinite(v))
            throw std::invalid_argument("non-finite value at sample " + std::to_string(i));
        if (ts.kind == SeriesKind::categorical && (v < 0.0 || std::floor(v) != v))
            throw std::invalid_argument("categorical values must be non-negative integers (sample " +
                                        std::to_string(i) + ")");
    }
}

std::pair<TimeSeries, TimeSeries>
truncate_to_common(const TimeSeries& a, const TimeSeries& b, long long thrshd) {
    validate(a);
    validate(b);
    long long la = static_cast<long long>(a.size());
    long long lb = static_cast<long long>(b.size());
    long long diff = la > lb ? la - lb : lb - la;
    if (diff > thrshd)
        throw std::invalid_argument("series length difference " + std::to_string(diff) +
                                    " exceeds thrshd " + std::to_string(thrshd));
    std::size_t n = static_cast<std::size_t>(la < lb ? la : lb);
    TimeSeries ta{std::vector<double>(a.values.begin(), a.values.begin() + n), a.kind};
    TimeSeries tb{std::vector<double>(b.values.begin(), b.values.begin() + n), b.kind};
    return {std::move(ta), std::move(tb)};
}

std::pair<TimeSeries, TimeSeries>
recode_shared(const TimeSeries& a, const TimeSeries& b) {
    if (a.kind != SeriesKind::categorical || b.kind != SeriesKind::categorical)
        throw std::invalid_argument("shared recoding requires categorical series");
    validate(a);
    validate(b);
    std::map<double, double> code;  // ordered, so codes follow ascending originals
    for (double v : a.values) code.emplace(v, 0.0);
    for (double v : b.values) code.emplace(v, 0.0);
    double next = 0.0;
    for (auto& [orig, fresh] : code) {
        (void)orig;
        fresh = next;
        next += 1.0;
    }
    auto apply = [&code](const TimeSeries& ts) {
        TimeSeries out{{}, SeriesKind::categorical};
        out.values.reserve(ts.size());
        for (double v : ts.values) out.values.push_back(code.at(v));
        return out;
    };
    return {apply(a), apply(b)};
}

std::pair<TimeSeries, TimeSeries>
recode_nonevents(const TimeSeries& a, const TimeSeries& b) {
    if (a.kind != SeriesKind::categorical || b.kind != SeriesKind::categorical)
        throw std::invalid_argument("non-event recoding requires categorical series");
    validate(a);
    validate(b);
    double maxcode = 0.0;
    for (double v : a.values) maxcode = v > maxcode ? v : maxcode;
    for (double v : b.values) maxcode = v > maxcode ? v : maxcode;
    auto apply = [](const TimeSeries& ts, double fresh) {
        TimeSeries out{{}, SeriesKind::categorical};
        out.values.reserve(ts.size());
        for (double v : ts.values) out.values.push_back(v == 0.0 ? fresh : v);
        return out;
    };
    return {apply(a, maxcode + 1.0), apply(b, maxcode + 2.0)};
}

}  // namespace crqa
