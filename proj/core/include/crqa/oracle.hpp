#pragma once

#include "crqa/measures.hpp"
#include "crqa/time_series.hpp"

namespace crqa::oracle {

/// Reference implementation of the full recurrence pipeline: the dense
/// distance matrix is materialized and every cell and every line run is
/// enumerated directly.  Slow on purpose; used to validate the fast
/// engine, whose results must match exactly.
CrqaMeasures crqa_measures(const TimeSeries& ts1, const TimeSeries& ts2,
                           const CrqaParams& params);

}  // namespace crqa::oracle
