#include "extremal/solvers/distance_ratio_sa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "extremal/rng.hpp"

namespace extremal {
namespace {

using Points = std::vector<std::vector<double>>;

double distance(const std::vector<double> &a, const std::vector<double> &b) {
    double sq = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

// (min_dist floored at 1e-8, max_dist, ratio); zeros when n < 2.
struct DistanceSummary {
    double min_dist = 0.0;
    double max_dist = 0.0;
    double ratio = 0.0;
};

DistanceSummary summarize(const Points &points) {
    if (points.size() < 2)
        return {};
    double lo = std::numeric_limits<double>::max();
    double hi = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double dist = distance(points[i], points[j]);
            lo = std::min(lo, dist);
            hi = std::max(hi, dist);
        }
    }
    lo = std::max(lo, 1e-8);
    return {lo, hi, hi / lo};
}

// Indices of the two smallest distances from `query` to rows of `snapshot`
// (ties broken by lower index). Mirrors a k=2 nearest-neighbor lookup where
// slot 0 is normally the query point itself.
std::pair<std::size_t, std::size_t> nearest_two(const Points &snapshot,
                                                const std::vector<double> &query) {
    std::size_t first = 0, second = 0;
    double best = std::numeric_limits<double>::max();
    double runner = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
        const double dist = distance(snapshot[i], query);
        if (dist < best) {
            runner = best;
            second = first;
            best = dist;
            first = i;
        } else if (dist < runner) {
            runner = dist;
            second = i;
        }
    }
    return {first, second};
}

void clip_unit(std::vector<double> &point) {
    for (double &c : point)
        c = std::clamp(c, 0.0, 1.0);
}

double adaptive_cooling(double temperature, double cooling_rate,
                        const std::vector<char> &accept_history, int cooling_window) {
    const std::size_t window =
        std::min(accept_history.size(), static_cast<std::size_t>(cooling_window));
    double accepted = 0.0;
    for (std::size_t i = accept_history.size() - window; i < accept_history.size(); ++i)
        accepted += accept_history[i];
    const double rate = accepted / static_cast<double>(window);
    double adj = 1.0;
    if (rate < 0.2)
        adj = 1.02; // cooling too fast: linger
    else if (rate > 0.8)
        adj = 0.98; // still too hot: cool quicker
    return temperature * cooling_rate * adj;
}

} // namespace

SaParams sa_default_params(int d) {
    SaParams params;
    if (d > 2) {
        params.iterations = 6000;
        params.cooling_rate = 0.996;
        params.perturbation_factor = 0.12;
        params.smoothing_interval = std::max(10, params.iterations / 30);
    } else {
        params.smoothing_interval = std::max(10, params.iterations / 20);
    }
    return params;
}

bool sa_accepts(double delta, double temperature, double u) {
    return delta < 0.0 || u < std::exp(-delta / temperature);
}

PlanarPoints sa_min_distance_ratio(const SaParams &params, int n, int d) {
    if (n < 2)
        throw std::invalid_argument("sa_min_distance_ratio: need n >= 2");
    if (d < 1)
        throw std::invalid_argument("sa_min_distance_ratio: need d >= 1");
    if (params.iterations <= 0 || params.initial_temperature <= 0.0 ||
        params.cooling_rate <= 0.0 || params.cooling_rate >= 1.0 ||
        params.perturbation_factor <= 0.0 || params.window_size <= 0 ||
        params.cooling_window <= 0 || params.smoothing_interval <= 0 ||
        params.reheat_interval <= 0)
        throw std::invalid_argument("sa_min_distance_ratio: bad schedule parameter");

    Rng rng(params.seed);
    const std::size_t un = static_cast<std::size_t>(n);
    const std::size_t ud = static_cast<std::size_t>(d);

    Points current(un, std::vector<double>(ud));
    for (auto &point : current)
        for (double &c : point)
            c = rng.next_double();

    double current_ratio = summarize(current).ratio;
    Points best_points = current;
    double best_ratio = current_ratio;

    const double t0 = params.initial_temperature;
    double temperature = t0;
    std::vector<char> accept_history;
    accept_history.reserve(static_cast<std::size_t>(params.iterations));

    for (int i = 0; i < params.iterations; ++i) {
        // Neighbor queries all use this iteration-top snapshot, so moves made
        // later in the iteration see slightly stale neighbor positions.
        const Points snapshot = current;

        if ((i + 1) % params.smoothing_interval == 0 && n > 1) {
            // Inverse-distance-weighted pull toward the k nearest neighbors,
            // applied to every point simultaneously.
            const int k_smooth = std::min(d > 2 ? 6 : 4, n - 1);
            const double blend = d > 2 ? 0.6 : 0.7;
            Points smoothed(un, std::vector<double>(ud, 0.0));
            for (std::size_t p = 0; p < un; ++p) {
                std::vector<std::pair<double, std::size_t>> order;
                order.reserve(un - 1);
                for (std::size_t q = 0; q < un; ++q)
                    if (q != p)
                        order.emplace_back(distance(snapshot[q], snapshot[p]), q);
                std::sort(order.begin(), order.end());
                double weight_sum = 0.0;
                std::vector<double> mean(ud, 0.0);
                for (int nb = 0; nb < k_smooth; ++nb) {
                    const double w = 1.0 / (order[static_cast<std::size_t>(nb)].first + 1e-6);
                    weight_sum += w;
                    const auto &neighbor = snapshot[order[static_cast<std::size_t>(nb)].second];
                    for (std::size_t c = 0; c < ud; ++c)
                        mean[c] += w * neighbor[c];
                }
                for (std::size_t c = 0; c < ud; ++c)
                    smoothed[p][c] =
                        std::clamp(snapshot[p][c] * blend + (mean[c] / weight_sum) * (1.0 - blend),
                                   0.0, 1.0);
            }
            current = std::move(smoothed);
            current_ratio = summarize(current).ratio;
            if (current_ratio < best_ratio) {
                best_points = current;
                best_ratio = current_ratio;
            }
        }

        // Step size decays sublinearly with temperature; the +0.15 keeps a
        // usable floor once the system is cold.
        const double strength =
            params.perturbation_factor * (std::pow(temperature / t0, 0.6) + 0.15);

        const std::size_t idx = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
        const std::vector<double> old_point = current[idx];

        const double repulsion_prob =
            d > 2 ? std::clamp(temperature / t0, 0.2, 0.8)
                  : std::clamp(temperature / t0 + 0.1, 0.5, 0.95);

        std::vector<double> candidate(ud);
        for (std::size_t c = 0; c < ud; ++c)
            candidate[c] = old_point[c] + rng.uniform(-strength, strength);
        if (n > 1 && rng.next_double() < repulsion_prob) {
            // Replace the jitter with a deterministic push away from the
            // nearest neighbor (second-closest snapshot row; the closest is
            // normally the point itself).
            const auto [self, neighbor] = nearest_two(snapshot, old_point);
            (void)self;
            std::vector<double> dir(ud);
            double norm = 0.0;
            for (std::size_t c = 0; c < ud; ++c) {
                dir[c] = old_point[c] - snapshot[neighbor][c];
                norm += dir[c] * dir[c];
            }
            norm = std::sqrt(norm);
            if (norm > 1e-8)
                for (std::size_t c = 0; c < ud; ++c)
                    candidate[c] = old_point[c] + strength * dir[c] / norm;
        }
        clip_unit(candidate);
        current[idx] = candidate;
        const double candidate_ratio = summarize(current).ratio;

        const double delta = candidate_ratio - current_ratio;
        bool accept;
        if (delta < 0.0)
            accept = true;
        else
            accept = rng.next_double() < std::exp(-delta / temperature);

        if (accept) {
            current_ratio = candidate_ratio;
            // Post-acceptance relaxation: nudge the moved point further away
            // from its nearest (snapshot) neighbor.
            const auto [nearest, second] = nearest_two(snapshot, current[idx]);
            (void)nearest;
            std::vector<double> dir(ud);
            double norm = 0.0;
            for (std::size_t c = 0; c < ud; ++c) {
                dir[c] = current[idx][c] - snapshot[second][c];
                norm += dir[c] * dir[c];
            }
            norm = std::sqrt(norm);
            if (norm > 1e-8) {
                for (std::size_t c = 0; c < ud; ++c)
                    current[idx][c] += 0.1 * params.perturbation_factor * dir[c] / norm;
                clip_unit(current[idx]);
                current_ratio = summarize(current).ratio;
                if (current_ratio < best_ratio) {
                    best_points = current;
                    best_ratio = current_ratio;
                }
            }
            if (current_ratio < best_ratio) {
                best_points = current;
                best_ratio = current_ratio;
            }
        } else {
            current[idx] = old_point;
        }

        accept_history.push_back(accept ? 1 : 0);
        temperature = adaptive_cooling(temperature, params.cooling_rate, accept_history,
                                       params.cooling_window);
        if (d > 2 && (i + 1) % params.reheat_interval == 0)
            temperature = std::max(temperature, t0 * 0.3);

        // Plateau escape: once per window, if almost nothing was accepted
        // recently, teleport one point to a fresh uniform position.
        if ((i + 1) % params.window_size == 0 &&
            accept_history.size() >= static_cast<std::size_t>(params.window_size)) {
            double recent = 0.0;
            for (std::size_t h = accept_history.size() - static_cast<std::size_t>(params.window_size);
                 h < accept_history.size(); ++h)
                recent += accept_history[h];
            if (recent / params.window_size < 0.1) {
                const std::size_t j =
                    static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
                for (double &c : current[j])
                    c = rng.next_double();
                current_ratio = summarize(current).ratio;
            }
        }
    }

    // Keep-if-better Gaussian refinement of the best configuration found.
    const int refine_iters = std::max(100, params.iterations / 20);
    for (int it = 0; it < refine_iters; ++it) {
        const std::size_t idx = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
        const std::vector<double> old_point = best_points[idx];
        for (std::size_t c = 0; c < ud; ++c)
            best_points[idx][c] = old_point[c] + rng.normal(0.0, params.perturbation_factor * 0.05);
        clip_unit(best_points[idx]);
        const double refined = summarize(best_points).ratio;
        if (refined < best_ratio)
            best_ratio = refined;
        else
            best_points[idx] = old_point;
    }

    return PlanarPoints{std::move(best_points)};
}

} // namespace extremal
