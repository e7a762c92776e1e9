#pragma once

#include <string>
#include <vector>

#include "crqa/time_series.hpp"

namespace crqa {

/// A sequence of recurrence (or correlation) values over an integer axis.
///
/// Lag convention, shared by every lagged operation in this library: the
/// value at lag d pairs series1[i + d] with series2[i].  Consequently a
/// negative peak lag means the first series leads the second: when ts2 is
/// a copy of ts1 delayed by k samples, the profile peaks at lag -k.
struct RecurrenceProfile {
    enum class Axis { lag, window_start };

    Axis axis = Axis::lag;
    std::vector<int> positions;
    std::vector<double> values;
    double maxrec = 0.0;
    int maxpos = 0;
    std::vector<std::string> warnings;
};

/// Diagonal-wise recurrence profile over lags -ws..+ws: the fraction of
/// overlapping samples within `radius` of each other at each lag.
/// Categorical series should use a radius below 1 so that recurrence
/// means exact code identity.
RecurrenceProfile drpdfromts(const TimeSeries& ts1, const TimeSeries& ts2,
                             int ws, double radius, long long thrshd = 0);

/// Windowed recurrence profile: windows of `windowsize` samples starting
/// at 0, step, 2*step, ... (windows that would run past the end are
/// dropped).  Each window's value is the unweighted mean of its lag
/// profile over -lagwidth..+lagwidth.
RecurrenceProfile windowdrp(const TimeSeries& x, const TimeSeries& y,
                            int step, int windowsize, int lagwidth,
                            double radius, long long thrshd = 0);

/// Lagged Pearson cross-correlation over -maxlag..+maxlag, same lag
/// convention as drpdfromts.  A zero-variance overlap segment yields 0
/// for that lag plus a warning.
RecurrenceProfile cross_correlation(const TimeSeries& x, const TimeSeries& y,
                                    int maxlag, long long thrshd = 0);

}  // namespace crqa
