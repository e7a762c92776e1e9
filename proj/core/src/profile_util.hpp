#pragma once

#include <cstddef>

#include "crqa/profiles.hpp"

namespace crqa::detail {

// maxrec/maxpos with ties broken toward the smallest (most negative)
// position.
inline void finalize_profile(RecurrenceProfile& p) {
    if (p.values.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.values.size(); ++i) {
        if (p.values[i] > p.values[best] ||
            (p.values[i] == p.values[best] && p.positions[i] < p.positions[best]))
            best = i;
    }
    p.maxrec = p.values[best];
    p.maxpos = p.positions[best];
}

}  // namespace crqa::detail
