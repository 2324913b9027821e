#include "extremal/scoring.hpp"

#include <stdexcept>

namespace extremal {

double normalize_score(Direction direction, double raw_metric, bool valid) {
    if (!valid)
        return -1.0;
    if (direction == Direction::HigherBetter)
        return raw_metric;
    if (raw_metric <= 0.0)
        throw std::domain_error("normalize_score: non-positive metric for a "
                                "lower-is-better problem");
    return 1.0 / raw_metric;
}

double excel_at_best(Direction direction, double best_raw, double human_best) {
    if (human_best == 0.0)
        throw std::domain_error("excel_at_best: undefined for a zero baseline");
    const double sign = direction == Direction::HigherBetter ? 1.0 : -1.0;
    return sign * (best_raw - human_best) / human_best;
}

double reported_metric(const ProblemSpec &problem, double raw_metric) {
    if (problem.table_metric == "R2")
        return raw_metric * raw_metric;
    return raw_metric;
}

} // namespace extremal
