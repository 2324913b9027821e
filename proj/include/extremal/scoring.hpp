#pragma once

#include "extremal/types.hpp"

namespace extremal {

// Normalized score: higher is always better, so LowerBetter metrics are
// inverted. Invalid results score -1.0 (sorts below every valid score, since
// raw metrics here are positive). Throws std::domain_error on a non-positive
// raw metric for a valid LowerBetter result (1/raw would flip its sign).
double normalize_score(Direction direction, double raw_metric, bool valid);

// Signed relative excellence of the run's best raw metric against the human
// baseline, in the problem's preferred direction: positive = beats the
// baseline, negative = falls short. Fraction, not percent (0.001 = +0.1%).
// Throws std::domain_error when the baseline is zero.
double excel_at_best(Direction direction, double best_raw, double human_best);

// The raw metric in the problem's reporting units. Most problems report the
// raw metric itself; max-min-ratio quotes the squared ratio (human_best is
// stored in those units). Comparisons against human_best must go through
// this.
double reported_metric(const ProblemSpec &problem, double raw_metric);

} // namespace extremal
