#pragma once

#include "extremal/types.hpp"

namespace extremal {

struct MstdConfig {
    int N = 30; // ground set {0, ..., N-1}
};

// A is the support of the indicator vector; raw = |A+A| / |A-A| (higher
// better). Sum and difference sets are computed exactly over the integer
// ranges [0, 2N-2] and [-(N-1), N-1]. Reasons: "count" (length != N),
// "indicator" (entry not 0/1), "empty" (A has no elements).
// Metrics: sumset (|A+A|), diffset (|A-A|), size (|A|).
EvalResult eval_mstd(const MstdConfig &config, const IndicatorSet &payload);

} // namespace extremal
