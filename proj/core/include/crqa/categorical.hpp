#pragma once

#include <vector>

#include "crqa/profiles.hpp"
#include "crqa/time_series.hpp"

namespace crqa {

/// Cross-tabulation of two categorical series at a fixed lag over the
/// shared alphabet (ascending union of the codes of both series).
///
/// For lag >= 0, counts(i, j) = #{ t : x(t) = alphabet[i] and
/// y(t + lag) = alphabet[j] }; negative lags shift x instead of y
/// symmetrically.  The counts always sum to T - |lag|.
struct ContingencyTable {
    int lag = 0;
    std::vector<int> alphabet;
    std::vector<long long> counts;  // K x K, row-major

    long long at(int i, int j) const {
        return counts[static_cast<std::size_t>(i) * alphabet.size() + j];
    }
    long long total() const;
    long long trace() const;
};

ContingencyTable contingency_table(const TimeSeries& x, const TimeSeries& y,
                                   int lag, long long thrshd = 0);

/// Categorical recurrence profile computed through contingency tables:
/// the value at each lag is trace(CT)/sum(CT) for the table aligned with
/// the library-wide lag convention, and therefore equals drpdfromts at
/// that lag with a radius below 1.
RecurrenceProfile ctcrqa(const TimeSeries& ts1, const TimeSeries& ts2,
                         const std::vector<int>& lags, long long thrshd = 0);

/// Phi coefficient profile for one target code k over lags -ws..+ws.
/// Each series is binarized to (value == k) and phi is computed from the
/// 2x2 table; any zero marginal yields 0 for that lag.
RecurrenceProfile calcphi(const TimeSeries& t1, const TimeSeries& t2,
                          int ws, int k, long long thrshd = 0);

}  // namespace crqa
