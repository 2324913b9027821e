#include "extremal/solvers/circle_packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace extremal {
namespace {

double radius_sum(const std::vector<Circle> &circles) {
    double sum = 0.0;
    for (const auto &c : circles)
        sum += c.r;
    return sum;
}

// Grid seed: tries every rows x cols layout up to 20x20 that holds exactly n
// equal circles and keeps the one with the largest total radius; falls back
// to the hexagonal lattice when no grid fits.
std::vector<Circle> uniform_tiling_circles(int n, double square_size) {
    if (n <= 0)
        return {};
    std::vector<Circle> best_layout;
    double best_total = 0.0;

    for (int rows = 1; rows <= std::min(n, 19); ++rows) {
        const int cols = (n + rows - 1) / rows;
        if (cols > 20)
            continue;
        const double spacing_x = square_size / (cols + 1);
        const double spacing_y = square_size / (rows + 1);
        const double max_radius =
            std::min(std::min(spacing_x, spacing_y) / 2.0,
                     std::min(spacing_x / 2.0 - 1e-6, spacing_y / 2.0 - 1e-6));
        if (max_radius <= 0.0)
            continue;

        std::vector<Circle> layout;
        for (int row = 0; row < rows && static_cast<int>(layout.size()) < n; ++row) {
            for (int col = 0; col < cols && static_cast<int>(layout.size()) < n; ++col) {
                const double x = spacing_x * (col + 1);
                const double y = spacing_y * (row + 1);
                if (x - max_radius >= 0.0 && x + max_radius <= square_size &&
                    y - max_radius >= 0.0 && y + max_radius <= square_size)
                    layout.push_back({x, y, max_radius});
            }
        }
        const double total = static_cast<double>(layout.size()) * max_radius;
        if (static_cast<int>(layout.size()) == n && total > best_total) {
            best_total = total;
            best_layout = std::move(layout);
        }
    }
    if (!best_layout.empty())
        return best_layout;
    return hexagonal_packing(n, square_size).circles;
}

// Seeding stage for one start: hexagonal lattice (with a short refinement)
// when it yields exactly n circles, then the uniform grid, then an adaptive
// estimated grid topped up by a fine grid search.
std::vector<Circle> optimize_placement(int n, double square_size, Rng &rng) {
    std::vector<Circle> hex = hexagonal_packing(n, square_size).circles;
    if (static_cast<int>(hex.size()) == n) {
        refine_circles(hex, square_size, 20, rng);
        return hex;
    }

    std::vector<Circle> grid = uniform_tiling_circles(n, square_size);
    if (static_cast<int>(grid.size()) == n)
        return grid;

    // Adaptive fallback: spacing from the per-circle area estimate.
    std::vector<Circle> circles;
    const double area_per_circle = square_size * square_size / n;
    const double estimated_radius = std::sqrt(area_per_circle / 3.14159265358979323846) * 0.9;
    const double spacing = estimated_radius * 2.1;
    const int cols = static_cast<int>(square_size / spacing);
    const int rows = static_cast<int>(square_size / spacing);
    if (cols > 0 && rows > 0) {
        const double actual_x = square_size / (cols + 1);
        const double actual_y = square_size / (rows + 1);
        for (int row = 0; row < rows && static_cast<int>(circles.size()) < n; ++row) {
            for (int col = 0; col < cols && static_cast<int>(circles.size()) < n; ++col) {
                const double x = actual_x * (col + 1);
                const double y = actual_y * (row + 1);
                const double r = max_circle_radius(x, y, circles, square_size);
                if (r > 0.0)
                    circles.push_back({x, y, r});
            }
        }
    }

    // Top up one circle at a time at the best spot on a fine grid.
    constexpr int kGridPoints = 100;
    while (static_cast<int>(circles.size()) < n) {
        double best_r = 0.0;
        Circle best{0.5 * square_size, 0.5 * square_size, 0.0};
        for (int gx = 1; gx < kGridPoints; ++gx) {
            for (int gy = 1; gy < kGridPoints; ++gy) {
                const double x = square_size * gx / kGridPoints;
                const double y = square_size * gy / kGridPoints;
                const double r = max_circle_radius(x, y, circles, square_size);
                if (r > best_r) {
                    best_r = r;
                    best = {x, y, r};
                }
            }
        }
        circles.push_back(best); // r == 0 only when the square is saturated
    }
    return circles;
}

} // namespace

double max_circle_radius(double x, double y, std::span<const Circle> others, double square_size,
                         int skip) {
    double r_max = std::min(std::min(x, y), std::min(square_size - x, square_size - y));
    for (std::size_t i = 0; i < others.size(); ++i) {
        if (static_cast<int>(i) == skip)
            continue;
        if (r_max <= 1e-8)
            break;
        const double dx = x - others[i].x;
        const double dy = y - others[i].y;
        const double sep = r_max + others[i].r;
        if (dx * dx + dy * dy < sep * sep)
            r_max = std::min(r_max, std::sqrt(dx * dx + dy * dy) - others[i].r);
    }
    return std::max(r_max, 0.0);
}

Circles hexagonal_packing(int n, double square_size) {
    Circles result;
    if (n <= 0)
        return result;
    const int rows = static_cast<int>(std::sqrt(n * 2.0 / std::sqrt(3.0))) + 2;
    const int base_cols = static_cast<int>(std::sqrt(static_cast<double>(n)));

    int count = 0;
    for (int row = 0; row < rows && count < n; ++row) {
        const double y = (row + 0.5) * (square_size / (rows + 1));
        // Even rows carry one extra circle; odd rows shift by half a spacing.
        const int cols = row % 2 == 0 ? base_cols + 1 : base_cols;
        const double spacing_x = square_size / (cols + 1);
        for (int col = 0; col < cols && count < n; ++col) {
            const double x =
                row % 2 == 0 ? spacing_x * (col + 1) : spacing_x * (col + 1) + spacing_x / 2.0;
            const double r = max_circle_radius(x, y, result.circles, square_size);
            if (r > 0.0) {
                result.circles.push_back({x, y, r});
                ++count;
            }
        }
    }
    return result;
}

void grow_radii_sweep(std::vector<Circle> &circles, double square_size,
                      std::span<const int> order) {
    for (int idx : order) {
        auto &c = circles[static_cast<std::size_t>(idx)];
        c.r = max_circle_radius(c.x, c.y, circles, square_size, idx);
    }
}

void refine_circles(std::vector<Circle> &circles, double square_size, int iterations, Rng &rng,
                    int perturb_interval) {
    if (circles.empty())
        return;
    std::vector<int> indices(circles.size());
    std::iota(indices.begin(), indices.end(), 0);

    for (int it = 0; it < iterations; ++it) {
        // Fisher-Yates shuffle: random sweep order avoids systematic bias.
        for (std::size_t i = indices.size(); i > 1; --i)
            std::swap(indices[i - 1], indices[static_cast<std::size_t>(rng.below(i))]);
        grow_radii_sweep(circles, square_size, indices);

        if (it % perturb_interval == 0) {
            // Jiggle a small random subset; keep a move only when the circle
            // can grow at its new center.
            const std::size_t subset = std::min<std::size_t>(5, circles.size());
            std::vector<int> pool = indices;
            for (std::size_t s = 0; s < subset; ++s) {
                const std::size_t pick = s + static_cast<std::size_t>(rng.below(pool.size() - s));
                std::swap(pool[s], pool[pick]);
                const int j = pool[s];
                auto &c = circles[static_cast<std::size_t>(j)];
                const double nx =
                    std::clamp(c.x + rng.uniform(-0.03, 0.03), 0.0, square_size);
                const double ny =
                    std::clamp(c.y + rng.uniform(-0.03, 0.03), 0.0, square_size);
                const double nr = max_circle_radius(nx, ny, circles, square_size, j);
                if (nr > c.r)
                    c = {nx, ny, nr};
            }
        }
    }

    // Keep-if-better center search with a shrinking window.
    for (std::size_t i = 0; i < circles.size(); ++i) {
        const Circle original = circles[i];
        Circle best = original;
        double delta = 0.1;
        for (int attempt = 0; attempt < 20; ++attempt) {
            const double nx =
                std::clamp(original.x + rng.uniform(-delta, delta), 0.0, square_size);
            const double ny =
                std::clamp(original.y + rng.uniform(-delta, delta), 0.0, square_size);
            const double nr =
                max_circle_radius(nx, ny, circles, square_size, static_cast<int>(i));
            if (nr > best.r)
                best = {nx, ny, nr};
            else
                delta *= 0.9;
        }
        circles[i] = best;
    }

    // Soft repulsive relaxation: nudge each center along the net overlap
    // force, then recompute its radius at the new spot.
    for (std::size_t i = 0; i < circles.size(); ++i) {
        double fx = 0.0, fy = 0.0;
        for (std::size_t j = 0; j < circles.size(); ++j) {
            if (i == j)
                continue;
            const double dx = circles[i].x - circles[j].x;
            const double dy = circles[i].y - circles[j].y;
            const double dist = std::sqrt(dx * dx + dy * dy);
            const double overlap = circles[i].r + circles[j].r - dist;
            if (overlap > 0.0 && dist > 1e-8) {
                fx += dx / dist * overlap;
                fy += dy / dist * overlap;
            }
        }
        const double nx = std::clamp(circles[i].x + 0.1 * fx, 0.0, square_size);
        const double ny = std::clamp(circles[i].y + 0.1 * fy, 0.0, square_size);
        const double nr = max_circle_radius(nx, ny, circles, square_size, static_cast<int>(i));
        circles[i] = {nx, ny, nr};
    }
}

Circles pack_circles_baseline(const PackingParams &params) {
    const int n = params.n;
    if (n < 0)
        throw std::invalid_argument("pack_circles_baseline: negative n");
    if (params.square_size <= 0.0 || params.refine_iterations < 1 || params.densify_rounds < 0 ||
        params.reinsert_samples < 1)
        throw std::invalid_argument("pack_circles_baseline: bad parameter");
    if (n == 0)
        return {};
    if (n == 1) {
        // The optimum is closed-form; the lattice seeding degenerates here.
        const double half = params.square_size / 2.0;
        return Circles{{{half, half, half}}};
    }

    const double square_size = params.square_size;
    int starts = params.starts;
    if (starts <= 0)
        starts = n <= 50 ? std::max(200, 20 * n) : std::max(100, 10 * n);

    const double hex_sum = radius_sum(hexagonal_packing(n, square_size).circles);

    // Multi-start: each start owns an independent RNG stream, so the result
    // does not depend on evaluation order, and the scan stops early once a
    // start reaches the hex-baseline fraction.
    std::vector<Circle> best_conf;
    double best_sum = 0.0;
    for (int s = 0; s < starts; ++s) {
        Rng rng = Rng::stream(params.seed, static_cast<std::uint64_t>(s));
        std::vector<Circle> conf = optimize_placement(n, square_size, rng);
        refine_circles(conf, square_size, params.refine_iterations, rng);
        const double sum = radius_sum(conf);
        if (sum > best_sum) {
            best_sum = sum;
            best_conf = std::move(conf);
        }
        if (best_sum >= hex_sum * params.early_exit_threshold)
            break;
    }

    // Densification: remove the two smallest circles, let the rest grow, then
    // reinsert each removed circle at the best of `reinsert_samples` uniform
    // positions. Track the best stable snapshot across rounds, since the
    // relaxation step inside refine_circles may trade a little total radius
    // for slack.
    std::vector<Circle> snapshot = best_conf;
    double snapshot_sum = best_sum;
    Rng densify_rng = Rng::stream(params.seed, 0x64656e73ULL); // distinct stream
    std::vector<Circle> circles = std::move(best_conf);

    for (int round = 0; round < params.densify_rounds; ++round) {
        if (circles.size() < 2)
            break;
        // Indices of the two smallest radii.
        std::size_t small_a = 0, small_b = 1;
        if (circles[small_b].r < circles[small_a].r)
            std::swap(small_a, small_b);
        for (std::size_t i = 2; i < circles.size(); ++i) {
            if (circles[i].r < circles[small_a].r) {
                small_b = small_a;
                small_a = i;
            } else if (circles[i].r < circles[small_b].r) {
                small_b = i;
            }
        }
        std::vector<Circle> removed = {circles[small_a], circles[small_b]};
        if (small_a < small_b)
            std::swap(small_a, small_b);
        circles.erase(circles.begin() + static_cast<std::ptrdiff_t>(small_a));
        circles.erase(circles.begin() + static_cast<std::ptrdiff_t>(small_b));

        refine_circles(circles, square_size, 8, densify_rng);

        for (const Circle &old : removed) {
            double best_r = 0.0;
            double best_x = old.x, best_y = old.y;
            for (int sample = 0; sample < params.reinsert_samples; ++sample) {
                const double x = densify_rng.uniform(0.0, square_size);
                const double y = densify_rng.uniform(0.0, square_size);
                const double r = max_circle_radius(x, y, circles, square_size);
                if (r > best_r) {
                    best_r = r;
                    best_x = x;
                    best_y = y;
                }
            }
            if (best_r <= 0.0) {
                // Pathological: every sample was covered. Fall back to a
                // deterministic fine-grid scan for any free spot.
                constexpr int kGridPoints = 100;
                for (int gx = 1; gx < kGridPoints; ++gx) {
                    for (int gy = 1; gy < kGridPoints; ++gy) {
                        const double x = square_size * gx / kGridPoints;
                        const double y = square_size * gy / kGridPoints;
                        const double r = max_circle_radius(x, y, circles, square_size);
                        if (r > best_r) {
                            best_r = r;
                            best_x = x;
                            best_y = y;
                        }
                    }
                }
            }
            circles.push_back({best_x, best_y, best_r});
        }

        refine_circles(circles, square_size, 5, densify_rng);

        const double sum = radius_sum(circles);
        if (sum > snapshot_sum) {
            snapshot_sum = sum;
            snapshot = circles;
        }
    }

    return Circles{std::move(snapshot)};
}

} // namespace extremal
