#pragma once

#include "extremal/types.hpp"

namespace extremal {

// Trusted evaluators never mutate the payload and never throw on bad data:
// a constraint violation yields an invalid EvalResult whose `reason` names
// the first violated constraint. Exceptions are reserved for caller bugs.

struct CirclePackingConfig {
    int n = 26;                    // required circle count
    double square_size = 1.0;      // circles live in [0, square_size]^2
    double feasibility_tol = 1e-9; // slack below -tol => violation
};

// raw = sum of radii (higher better). Reasons: "count", "nonfinite",
// "radius" (r < 0), "containment", "overlap". Slack metrics
// (min_wall_slack, min_pair_slack) are reported un-tolerated, so a barely
// legal packing shows a slightly negative slack.
EvalResult eval_circle_packing(const CirclePackingConfig &config, const Circles &payload);

struct DistanceRatioConfig {
    int n = 16;
    int d = 2;
    double eps = 1e-8; // floor on the min distance; duplicates yield a huge ratio
};

// raw = max/min pairwise distance (lower better), points in [0,1]^d.
// Reasons: "count", "dimension", "nonfinite", "range", "degenerate" (all
// points coincide, which would make the ratio 0/eps).
EvalResult eval_distance_ratio(const DistanceRatioConfig &config, const PlanarPoints &payload);

struct SphericalCodeConfig {
    int n = 30;
    double norm_tol = 1e-9;            // |(norm)-1| <= norm_tol: used as-is
    double max_norm_deviation = 1e-6;  // beyond this the row is rejected
};

// raw = min pairwise angle in radians (higher better). Rows with
// |norm - 1| in (norm_tol, max_norm_deviation] are renormalized before the
// angle computation. Reasons: "count", "dimension", "nonfinite", "norm".
EvalResult eval_spherical_code(const SphericalCodeConfig &config, const SpherePoints &payload);

} // namespace extremal
