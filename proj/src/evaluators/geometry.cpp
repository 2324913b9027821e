#include "extremal/evaluators/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace extremal {
namespace {

double worst_raw(Direction direction) {
    return direction == Direction::HigherBetter ? -std::numeric_limits<double>::infinity()
                                                : std::numeric_limits<double>::infinity();
}

EvalResult invalid_result(Direction direction, std::string reason) {
    EvalResult result;
    result.valid = false;
    result.raw_metric = worst_raw(direction);
    result.score = -1.0;
    result.reason = std::move(reason);
    return result;
}

} // namespace

EvalResult eval_circle_packing(const CirclePackingConfig &config, const Circles &payload) {
    const auto &circles = payload.circles;
    if (static_cast<int>(circles.size()) != config.n)
        return invalid_result(Direction::HigherBetter, "count");
    for (const auto &c : circles)
        if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.r))
            return invalid_result(Direction::HigherBetter, "nonfinite");
    for (const auto &c : circles)
        if (c.r < 0.0)
            return invalid_result(Direction::HigherBetter, "radius");

    const double S = config.square_size;
    const double tol = config.feasibility_tol;

    double min_wall_slack = std::numeric_limits<double>::max();
    for (const auto &c : circles) {
        const double slack =
            std::min(std::min(c.x - c.r, c.y - c.r), std::min(S - c.x - c.r, S - c.y - c.r));
        min_wall_slack = std::min(min_wall_slack, slack);
    }
    if (!circles.empty() && min_wall_slack < -tol)
        return invalid_result(Direction::HigherBetter, "containment");

    double min_pair_slack = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < circles.size(); ++i) {
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            const double dx = circles[i].x - circles[j].x;
            const double dy = circles[i].y - circles[j].y;
            const double dist = std::hypot(dx, dy);
            min_pair_slack = std::min(min_pair_slack, dist - circles[i].r - circles[j].r);
        }
    }
    if (circles.size() >= 2 && min_pair_slack < -tol)
        return invalid_result(Direction::HigherBetter, "overlap");

    double sum = 0.0;
    for (const auto &c : circles)
        sum += c.r;

    EvalResult result;
    result.valid = true;
    result.raw_metric = sum;
    result.score = sum;
    result.metrics["n"] = static_cast<double>(circles.size());
    if (!circles.empty())
        result.metrics["min_wall_slack"] = min_wall_slack;
    if (circles.size() >= 2)
        result.metrics["min_pair_slack"] = min_pair_slack;
    return result;
}

EvalResult eval_distance_ratio(const DistanceRatioConfig &config, const PlanarPoints &payload) {
    const auto &points = payload.points;
    if (static_cast<int>(points.size()) != config.n || config.n < 2)
        return invalid_result(Direction::LowerBetter, "count");
    for (const auto &row : points)
        if (static_cast<int>(row.size()) != config.d)
            return invalid_result(Direction::LowerBetter, "dimension");
    for (const auto &row : points)
        for (double c : row) {
            if (!std::isfinite(c))
                return invalid_result(Direction::LowerBetter, "nonfinite");
            if (c < 0.0 || c > 1.0)
                return invalid_result(Direction::LowerBetter, "range");
        }

    double min_dist = std::numeric_limits<double>::max();
    double max_dist = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double sq = 0.0;
            for (std::size_t k = 0; k < points[i].size(); ++k) {
                const double diff = points[i][k] - points[j][k];
                sq += diff * diff;
            }
            const double dist = std::sqrt(sq);
            min_dist = std::min(min_dist, dist);
            max_dist = std::max(max_dist, dist);
        }
    }

    // All points coincident: the eps floor would report ratio 0, which is not
    // a meaningful configuration for a min-ratio problem.
    if (max_dist <= 0.0)
        return invalid_result(Direction::LowerBetter, "degenerate");

    const double floored_min = std::max(min_dist, config.eps);
    const double ratio = max_dist / floored_min;

    EvalResult result;
    result.valid = true;
    result.raw_metric = ratio;
    result.score = 1.0 / ratio;
    result.metrics["min_dist"] = min_dist;
    result.metrics["max_dist"] = max_dist;
    result.metrics["R2"] = ratio * ratio;
    return result;
}

EvalResult eval_spherical_code(const SphericalCodeConfig &config, const SpherePoints &payload) {
    const auto &points = payload.points;
    if (static_cast<int>(points.size()) != config.n || config.n < 2)
        return invalid_result(Direction::HigherBetter, "count");
    for (const auto &row : points)
        if (row.size() != 3)
            return invalid_result(Direction::HigherBetter, "dimension");
    for (const auto &row : points)
        for (double c : row)
            if (!std::isfinite(c))
                return invalid_result(Direction::HigherBetter, "nonfinite");

    std::vector<std::array<double, 3>> unit(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double norm =
            std::sqrt(points[i][0] * points[i][0] + points[i][1] * points[i][1] +
                      points[i][2] * points[i][2]);
        if (std::abs(norm - 1.0) > config.max_norm_deviation)
            return invalid_result(Direction::HigherBetter, "norm");
        // Within norm_tol the row is taken as-is; beyond it we renormalize so
        // the angle computation sees exact unit vectors.
        const double scale = std::abs(norm - 1.0) <= config.norm_tol ? 1.0 : 1.0 / norm;
        unit[i] = {points[i][0] * scale, points[i][1] * scale, points[i][2] * scale};
    }

    double cos_max = -1.0;
    for (std::size_t i = 0; i < unit.size(); ++i) {
        for (std::size_t j = i + 1; j < unit.size(); ++j) {
            const double dot =
                unit[i][0] * unit[j][0] + unit[i][1] * unit[j][1] + unit[i][2] * unit[j][2];
            cos_max = std::max(cos_max, std::clamp(dot, -1.0, 1.0));
        }
    }
    const double theta_min = std::acos(cos_max);

    EvalResult result;
    result.valid = true;
    result.raw_metric = theta_min;
    result.score = theta_min;
    result.metrics["cos_max"] = cos_max;
    result.metrics["n"] = static_cast<double>(points.size());
    return result;
}

} // namespace extremal
