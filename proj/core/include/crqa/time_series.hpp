#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace crqa {

/// How the values of a series are to be interpreted.  Categorical series
/// hold non-negative integer codes stored as reals; recurrence between
/// categorical samples means exact code identity (use a radius below 1).
enum class SeriesKind { categorical, continuous };

/// A univariate time series.  Values must be finite; categorical series
/// must contain integral, non-negative codes.
struct TimeSeries {
    std::vector<double> values;
    SeriesKind kind = SeriesKind::continuous;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    static TimeSeries categorical(std::vector<double> v);
    static TimeSeries continuous(std::vector<double> v);
};

/// Throws std::invalid_argument when the series is empty, contains a
/// non-finite value, or violates its kind contract.
void validate(const TimeSeries& ts);

/// Truncates both series to the shorter length.  A length difference
/// larger than `thrshd` samples is treated as a data error.
std::pair<TimeSeries, TimeSeries>
truncate_to_common(const TimeSeries& a, const TimeSeries& b, long long thrshd = 0);

/// Recodes two categorical series onto one shared integer alphabet
/// (0..K-1, codes assigned in ascending order of the original codes over
/// the union of both series).  Equality relations are preserved.
std::pair<TimeSeries, TimeSeries>
recode_shared(const TimeSeries& a, const TimeSeries& b);

/// Replaces the 0 ("non-event") code of each series with a distinct fresh
/// code so that non-events never recur across series.  The fresh codes
/// are max(code)+1 for the first series and max(code)+2 for the second.
std::pair<TimeSeries, TimeSeries>
recode_nonevents(const TimeSeries& a, const TimeSeries& b);

}  // namespace crqa
